use super::Graph;

/// Zachary's karate club social network (34 members, 78 friendships),
/// 1-based as published.
const KARATE_CLUB: [(usize, usize); 78] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11), (1, 12),
    (1, 13), (1, 14), (1, 18), (1, 20), (1, 22), (1, 32), (2, 3), (2, 4), (2, 8), (2, 14),
    (2, 18), (2, 20), (2, 22), (2, 31), (3, 4), (3, 8), (3, 9), (3, 10), (3, 14), (3, 28),
    (3, 29), (3, 33), (4, 8), (4, 13), (4, 14), (5, 7), (5, 11), (6, 7), (6, 11), (6, 17),
    (7, 17), (9, 31), (9, 33), (9, 34), (10, 34), (14, 34), (15, 33), (15, 34), (16, 33),
    (16, 34), (19, 33), (19, 34), (20, 34), (21, 33), (21, 34), (23, 33), (23, 34),
    (24, 26), (24, 28), (24, 30), (24, 33), (24, 34), (25, 26), (25, 28), (25, 32),
    (26, 32), (27, 30), (27, 34), (28, 34), (29, 32), (29, 34), (30, 33), (30, 34),
    (31, 33), (31, 34), (32, 33), (32, 34), (33, 34),
];

/// Directed 8-vertex test network: a bidirected 4-clique {1,2,3,4} feeding
/// a tail 3→5→7→{6,8} that returns through 6→5 and 8→2 (1-based).
const EIGHT_VERTEX: [(usize, usize); 18] = [
    (1, 2), (1, 3), (1, 4),
    (2, 1), (2, 3), (2, 4),
    (3, 1), (3, 2), (3, 4), (3, 5),
    (4, 1), (4, 2), (4, 3),
    (5, 7),
    (6, 5),
    (7, 6), (7, 8),
    (8, 2),
];

/// The karate club network as an undirected graph.
pub fn zachary() -> Graph {
    Graph::undirected(34, KARATE_CLUB.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("embedded edge list is valid")
}

/// A small directed network with two structurally tied vertex pairs under
/// classical PageRank: {1, 4} and {6, 8}. Only the first tie survives the
/// coherent part of the quantum walk, because 6 and 8 have different
/// undirected neighbourhoods.
pub fn eight_vertex_example() -> Graph {
    Graph::directed(8, EIGHT_VERTEX.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("embedded edge list is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karate_club_shape() {
        let g = zachary();
        assert_eq!(g.vertex_count(), 34);
        assert_eq!(g.edge_count(), 78);
        assert!(!g.is_directed());
        assert!(g.degrees().iter().all(|&d| d >= 1));
        let d = g.degrees();
        assert_eq!(d[0], 16);
        assert_eq!(d[33], 17);
    }

    #[test]
    fn eight_vertex_shape() {
        let g = eight_vertex_example();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 18);
        assert!(g.out_degrees().iter().all(|&d| d > 0));
    }
}
