use std::collections::BTreeSet;

/// A value rounded to a fixed number of significant digits, as an exact
/// `(sign * mantissa, exponent)` pair so equality involves no float noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoundedKey {
    pub mantissa: i64,
    pub exponent: i32,
}

impl RoundedKey {
    /// Round `x` to `sig` significant decimal digits, half away from zero,
    /// judged on the exact binary value of `x`.
    pub fn new(x: f64, sig: u32) -> Self {
        assert!(x.is_finite(), "cannot round {x}");
        assert!((1..=17).contains(&sig), "significant digits must be in 1..=17");
        if x == 0.0 {
            return RoundedKey { mantissa: 0, exponent: 0 };
        }
        // Enough digits that the cut below sees the exact expansion for any
        // practical input.
        let text = format!("{:.40e}", x.abs());
        let (digits, exp) = text.split_once('e').expect("exponent present");
        let mut exponent: i32 = exp.parse().expect("integer exponent");
        let digits: Vec<u8> = digits.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        let sig = sig as usize;
        let mut mantissa = digits[..sig].iter().fold(0i64, |acc, &d| acc * 10 + d as i64);
        if digits[sig] >= 5 {
            mantissa += 1;
        }
        if mantissa == 10i64.pow(sig as u32) {
            mantissa /= 10;
            exponent += 1;
        }
        RoundedKey { mantissa: if x < 0.0 { -mantissa } else { mantissa }, exponent: exponent - sig as i32 + 1 }
    }

    pub fn value(self) -> f64 {
        format!("{}e{}", self.mantissa, self.exponent).parse().expect("valid float literal")
    }
}

/// `x` rounded to `sig` significant digits, half away from zero.
pub fn round_to_sig(x: f64, sig: u32) -> f64 {
    RoundedKey::new(x, sig).value()
}

/// Number of vertices minus the number of distinct scores after rounding
/// to `sig` significant digits.
pub fn degeneracy_count(ranks: &[f64], sig: u32) -> usize {
    let distinct: BTreeSet<RoundedKey> = ranks.iter().map(|&x| RoundedKey::new(x, sig)).collect();
    ranks.len() - distinct.len()
}
