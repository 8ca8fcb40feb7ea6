//! Direct graph-theoretic checks, independent of the orientation machinery.

use crate::graph::{bits, Graph};

/// Proper `k`-colouring by backtracking, colouring vertices in index order.
pub fn oracle_k_colourable(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, k: usize, colour: &mut Vec<usize>) -> bool {
        let u = colour.len();
        if u == g.n() {
            return true;
        }
        // symmetry: a new vertex never needs a colour beyond the next unused one
        let fresh = colour.iter().max().map_or(0, |&c| c + 1);
        for c in 0..k.min(fresh + 1) {
            if g.neighbors(u).filter(|&v| v < u).all(|v| colour[v] != c) {
                colour.push(c);
                if extend(g, k, colour) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    extend(g, k, &mut Vec::with_capacity(g.n()))
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn oracle_chordal(g: &Graph) -> bool {
    let mut alive: u64 = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    while alive != 0 {
        let simplicial = bits(alive).find(|&u| {
            let nb = g.neighbor_mask(u) & alive;
            bits(nb).all(|v| nb & !(1 << v) & !g.neighbor_mask(v) == 0)
        });
        match simplicial {
            Some(u) => alive &= !(1 << u),
            None => return false,
        }
    }
    true
}
