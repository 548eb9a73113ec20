//! Structural predicates used to recognise radial maps of polyhedral
//! skeletons: simplicity, 3-connectivity and separating 4-cycles.

use super::{Dart, EmbeddedMap};
use std::collections::HashSet;

/// No two distinct edges share both endpoints (and no loops).
pub fn is_simple(map: &EmbeddedMap) -> bool {
    let mut seen = HashSet::new();
    for e in 0..map.edge_count() {
        let u = map.vertex_of(2 * e);
        let v = map.vertex_of(2 * e + 1);
        if u == v {
            return false;
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return false;
        }
    }
    true
}

/// 3-connectivity of the underlying simple graph: at least four vertices and
/// no cut set of size at most two. Small enough maps are checked by brute
/// force over vertex pairs.
pub fn is_3_connected(map: &EmbeddedMap) -> bool {
    let n = map.vertex_count();
    if n < 4 || !map.is_connected() {
        return false;
    }
    let adj: Vec<HashSet<usize>> = map
        .vertices()
        .map(|v| map.neighbours(v).collect())
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(&adj, &[a, b]) {
                return false;
            }
        }
    }
    true
}

fn connected_without(adj: &[HashSet<usize>], removed: &[usize]) -> bool {
    let n = adj.len();
    let mut blocked = vec![false; n];
    for &r in removed {
        blocked[r] = true;
    }
    let start = match (0..n).find(|&v| !blocked[v]) {
        Some(v) => v,
        None => return true,
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !blocked[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
                count += 1;
            }
        }
    }
    count == n - removed.len()
}

/// Does the embedding contain a 4-cycle (four distinct vertices, four
/// distinct edges) with at least one vertex strictly inside each of the two
/// regions it bounds on the sphere?
pub fn has_separating_4cycle(map: &EmbeddedMap) -> bool {
    let mut tried = HashSet::new();
    for d0 in 0..map.dart_count() {
        for cycle in cycles_of_length_4_from(map, d0) {
            let mut key: Vec<usize> = cycle.iter().map(|&d| d / 2).collect();
            key.sort();
            if tried.insert(key) && cycle_separates(map, &cycle) {
                return true;
            }
        }
    }
    false
}

/// All closed walks of length 4 starting with dart `d0` that use four
/// distinct vertices and four distinct edges.
fn cycles_of_length_4_from(map: &EmbeddedMap, d0: Dart) -> Vec<[Dart; 4]> {
    let mut out = Vec::new();
    let v0 = map.vertex_of(d0);
    for d1 in map.rotation_from(map.alpha(d0)).skip(0) {
        if d1 / 2 == d0 / 2 {
            continue;
        }
        for d2 in map.rotation_from(map.alpha(d1)) {
            if d2 / 2 == d1 / 2 || d2 / 2 == d0 / 2 {
                continue;
            }
            for d3 in map.rotation_from(map.alpha(d2)) {
                if d3 / 2 == d2 / 2 || d3 / 2 == d1 / 2 || d3 / 2 == d0 / 2 {
                    continue;
                }
                if map.vertex_of(map.alpha(d3)) != v0 {
                    continue;
                }
                let vs = [
                    v0,
                    map.vertex_of(d1),
                    map.vertex_of(d2),
                    map.vertex_of(d3),
                ];
                let mut sorted = vs.to_vec();
                sorted.sort();
                sorted.dedup();
                if sorted.len() == 4 {
                    out.push([d0, d1, d2, d3]);
                }
            }
        }
    }
    out
}

/// Remove the cycle's edges from the face-adjacency graph; the sphere falls
/// apart into two regions. The cycle separates iff both regions contain a
/// vertex that is not on the cycle.
fn cycle_separates(map: &EmbeddedMap, cycle: &[Dart; 4]) -> bool {
    let cycle_edges: HashSet<usize> = cycle.iter().map(|&d| d / 2).collect();
    let cycle_vertices: HashSet<usize> = cycle.iter().map(|&d| map.vertex_of(d)).collect();
    let nf = map.face_count();
    let mut region = vec![usize::MAX; nf];
    let mut n_regions = 0;
    for start in 0..nf {
        if region[start] != usize::MAX {
            continue;
        }
        let id = n_regions;
        n_regions += 1;
        let mut stack = vec![start];
        region[start] = id;
        while let Some(f) = stack.pop() {
            for d in map.face_orbit(map.face_rep(f)) {
                if cycle_edges.contains(&(d / 2)) {
                    continue;
                }
                let g = map.face_of(map.alpha(d));
                if region[g] == usize::MAX {
                    region[g] = id;
                    stack.push(g);
                }
            }
        }
    }
    if n_regions != 2 {
        return false;
    }
    let mut interior = [false, false];
    for v in map.vertices() {
        if cycle_vertices.contains(&v) {
            continue;
        }
        let d = map.vertex_rep(v);
        interior[region[map.face_of(d)]] = true;
    }
    interior[0] && interior[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{c4, cube, p2, pseudo_double_wheel, q3, tetrahedron};

    #[test]
    fn simplicity_distinguishes_c4_from_q3() {
        assert!(is_simple(&c4()));
        assert!(is_simple(&p2()));
        assert!(!is_simple(&q3()));
    }

    #[test]
    fn c4_is_not_3_connected() {
        assert!(!is_3_connected(&c4()));
        assert!(!is_3_connected(&p2()));
        assert!(is_3_connected(&tetrahedron()));
        assert!(is_3_connected(&cube()));
    }

    #[test]
    fn small_pseudo_double_wheels_have_no_separating_4cycle() {
        for k in 3..=6 {
            let m = pseudo_double_wheel(k).unwrap();
            assert!(!has_separating_4cycle(&m), "k={k}");
        }
    }

    #[test]
    fn c4_does_not_separate() {
        // The 4-cycle itself: both regions are faces without interior
        // vertices.
        assert!(!has_separating_4cycle(&c4()));
    }
}
