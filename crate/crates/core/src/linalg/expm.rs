use nalgebra::DMatrix;

use super::Scalar;

// Padé numerator coefficients and the 1-norm bounds below which each degree
// meets double-precision backward error without scaling.
const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0];
const B9: [f64; 10] = [
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0, 2162160.0, 110880.0,
    3960.0, 90.0, 1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0, 10559470521600.0, 670442572800.0, 33522128640.0, 1323241920.0,
    40840800.0, 960960.0, 16380.0, 182.0, 1.0,
];
const THETA: [(f64, &[f64]); 4] = [
    (1.495585217958292e-2, &B3),
    (2.53939833006323e-1, &B5),
    (9.504178996162932e-1, &B7),
    (2.097847961257068e0, &B9),
];
const THETA13: f64 = 5.371920351148152;

fn norm1<T: Scalar>(a: &DMatrix<T>) -> f64 {
    a.column_iter().map(|c| c.iter().map(|z| z.modulus()).sum::<f64>()).fold(0.0, f64::max)
}

fn scaled<T: Scalar>(a: &DMatrix<T>, s: f64) -> DMatrix<T> {
    a.map(|z| z.scale(s))
}

/// `(V - U)^{-1} (V + U)`.
fn pade_quotient<T: Scalar>(u: DMatrix<T>, v: DMatrix<T>) -> DMatrix<T> {
    let denom = &v - &u;
    let numer = v + u;
    denom.lu().solve(&numer).expect("Padé denominator is nonsingular within the degree bounds")
}

/// Low-degree Padé approximant: odd terms form `U`, even terms `V`.
fn pade_low<T: Scalar>(a: &DMatrix<T>, b: &[f64]) -> DMatrix<T> {
    let n = a.nrows();
    let a2 = a * a;
    let id = DMatrix::<T>::identity(n, n);
    let mut u = scaled(&id, b[1]);
    let mut v = scaled(&id, b[0]);
    let mut p = id;
    for k in 1..b.len() / 2 {
        p = &p * &a2;
        u += scaled(&p, b[2 * k + 1]);
        v += scaled(&p, b[2 * k]);
    }
    pade_quotient(a * u, v)
}

fn pade13<T: Scalar>(a: &DMatrix<T>) -> DMatrix<T> {
    let n = a.nrows();
    let b = &B13;
    let id = DMatrix::<T>::identity(n, n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (scaled(&a6, b[13]) + scaled(&a4, b[11]) + scaled(&a2, b[9]))
        + scaled(&a6, b[7])
        + scaled(&a4, b[5])
        + scaled(&a2, b[3])
        + scaled(&id, b[1]);
    let u = a * u_inner;
    let v = &a6 * (scaled(&a6, b[12]) + scaled(&a4, b[10]) + scaled(&a2, b[8]))
        + scaled(&a6, b[6])
        + scaled(&a4, b[4])
        + scaled(&a2, b[2])
        + scaled(&id, b[0]);
    pade_quotient(u, v)
}

/// Dense matrix exponential by scaling and squaring with a degree-3..13
/// Padé approximant chosen from the 1-norm.
pub fn expm<T: Scalar>(a: &DMatrix<T>) -> DMatrix<T> {
    assert!(a.is_square(), "expm needs a square matrix");
    let n = a.nrows();
    if n == 0 {
        return a.clone();
    }
    let nrm = norm1(a);
    for &(theta, b) in &THETA {
        if nrm <= theta {
            return pade_low(a, b);
        }
    }
    let s = if nrm > THETA13 { (nrm / THETA13).log2().ceil() as i32 } else { 0 };
    let mut r = pade13(&scaled(a, 0.5f64.powi(s)));
    for _ in 0..s {
        r = &r * &r;
    }
    r
}
