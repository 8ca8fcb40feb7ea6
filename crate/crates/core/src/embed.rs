//! Induced-subdigraph containment and isomorphism.

use crate::graph::{bits, Digraph};

/// Finds an injective map `h -> d` whose image induces a copy of `h`.
///
/// `result[u]` is the image of vertex `u` of `h`. Backtracks over vertex
/// images, placing the most-connected vertices of `h` first and pruning by
/// in/out-degree.
pub fn contains_induced(h: &Digraph, d: &Digraph) -> Option<Vec<usize>> {
    if h.n() > d.n() || h.arc_count() > d.arc_count() {
        return None;
    }
    let order = placement_order(h);
    let mut image = vec![usize::MAX; h.n()];
    if extend(h, d, &order, 0, &mut image, 0) {
        Some(image)
    } else {
        None
    }
}

/// True iff `a` and `b` are isomorphic digraphs.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return false;
    }
    let mut da: Vec<(usize, usize)> = (0..a.n()).map(|u| (a.out_degree(u), a.in_degree(u))).collect();
    let mut db: Vec<(usize, usize)> = (0..b.n()).map(|u| (b.out_degree(u), b.in_degree(u))).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && contains_induced(a, b).is_some()
}

/// Vertices of `h`, each next one chosen with the most already-placed
/// neighbours (ties: larger degree, then smaller index).
fn placement_order(h: &Digraph) -> Vec<usize> {
    let n = h.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&u| placed >> u & 1 == 0)
            .max_by_key(|&u| {
                (
                    (h.neighbor_mask(u) & placed).count_ones(),
                    h.degree(u),
                    std::cmp::Reverse(u),
                )
            })
            .expect("an unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

fn extend(
    h: &Digraph,
    d: &Digraph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mut candidates = if d.n() == 64 { u64::MAX } else { (1u64 << d.n()) - 1 } & !used;
    // an already-placed neighbour pins the candidates to its neighbourhood
    if let Some(&p) = order[..depth].iter().find(|&&p| h.neighbor_mask(u) >> p & 1 == 1) {
        candidates &= d.neighbor_mask(image[p]);
    }
    for w in bits(candidates) {
        if d.out_degree(w) < h.out_degree(u) || d.in_degree(w) < h.in_degree(u) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = image[p];
            h.has_arc(u, p) == d.has_arc(w, q) && h.has_arc(p, u) == d.has_arc(q, w)
        });
        if !consistent {
            continue;
        }
        image[u] = w;
        if extend(h, d, order, depth + 1, image, used | 1 << w) {
            return true;
        }
    }
    image[u] = usize::MAX;
    false
}
