//! Slow, independent cross-checks for the fast paths.
//!
//! Nothing here is used by the production algorithms; tests call these to
//! confirm the canonical-code machinery and the generators against methods
//! with no shared logic: isomorphism by dart propagation, and class counts
//! by exhaustive enumeration of rotation systems.

use crate::map::{Colouring, Dart, EmbeddedMap};

/// Decide isomorphism by trying every image of dart 0 in both orientations
/// and propagating through the two permutations. A map isomorphism is
/// determined by the image of a single dart once the orientation is fixed,
/// so this is exhaustive.
pub fn isomorphic_by_propagation(a: &EmbeddedMap, b: &EmbeddedMap) -> bool {
    propagation_search(a, None, b, None)
}

pub fn coloured_isomorphic_by_propagation(
    a: &EmbeddedMap,
    ca: &Colouring,
    b: &EmbeddedMap,
    cb: &Colouring,
) -> bool {
    propagation_search(a, Some(ca), b, Some(cb))
}

fn propagation_search(
    a: &EmbeddedMap,
    ca: Option<&Colouring>,
    b: &EmbeddedMap,
    cb: Option<&Colouring>,
) -> bool {
    if a.dart_count() != b.dart_count() {
        return false;
    }
    if a.dart_count() == 0 {
        return true;
    }
    for image in 0..b.dart_count() {
        for reversed in [false, true] {
            if propagate(a, ca, b, cb, image, reversed) {
                return true;
            }
        }
    }
    false
}

fn propagate(
    a: &EmbeddedMap,
    ca: Option<&Colouring>,
    b: &EmbeddedMap,
    cb: Option<&Colouring>,
    image: Dart,
    reversed: bool,
) -> bool {
    let nd = a.dart_count();
    let mut f: Vec<Option<Dart>> = vec![None; nd];
    let mut hit = vec![false; nd];
    let mut stack = vec![(0usize, image)];
    let assign = |d: Dart, e: Dart, f: &mut Vec<Option<Dart>>, hit: &mut Vec<bool>| -> bool {
        match f[d] {
            Some(prev) => prev == e,
            None => {
                if hit[e] {
                    return false;
                }
                f[d] = Some(e);
                hit[e] = true;
                true
            }
        }
    };
    if !assign(0, image, &mut f, &mut hit) {
        return false;
    }
    while let Some((d, e)) = stack.pop() {
        if let (Some(ca), Some(cb)) = (ca, cb) {
            if ca.colour(a.vertex_of(d)) != cb.colour(b.vertex_of(e)) {
                return false;
            }
        }
        let pairs = [
            (a.alpha(d), b.alpha(e)),
            (
                a.sigma(d),
                if reversed { b.sigma_inv(e) } else { b.sigma(e) },
            ),
        ];
        for (dn, en) in pairs {
            let fresh = f[dn].is_none();
            if !assign(dn, en, &mut f, &mut hit) {
                return false;
            }
            if fresh {
                stack.push((dn, en));
            }
        }
    }
    // Both maps are connected, so propagation reached every dart.
    f.iter().all(|x| x.is_some())
}

/// All isomorphism-class representatives of spherical quadrangulations on
/// `n` vertices, found by enumerating every rotation system on the forced
/// number of darts. Feasible only for n <= 4 (8 darts, 8! systems).
pub fn brute_force_classes(n: usize) -> Vec<EmbeddedMap> {
    assert!((3..=4).contains(&n), "enumeration is only feasible for n in 3..=4");
    let m = 2 * n - 4;
    let nd = 2 * m;
    let mut reps: Vec<EmbeddedMap> = Vec::new();
    let mut sigma: Vec<Dart> = (0..nd).collect();
    permute(&mut sigma, nd, &mut |perm| {
        let Ok(map) = EmbeddedMap::from_sigma(perm.to_vec()) else {
            return;
        };
        if map.vertex_count() != n || !map.is_valid_quadrangulation() {
            return;
        }
        if !reps.iter().any(|r| isomorphic_by_propagation(r, &map)) {
            reps.push(map);
        }
    });
    reps
}

/// Heap's algorithm, visiting every permutation of the first `k` slots.
fn permute(xs: &mut [Dart], k: usize, visit: &mut impl FnMut(&[Dart])) {
    if k <= 1 {
        visit(xs);
        return;
    }
    for i in 0..k {
        permute(xs, k - 1, visit);
        if k % 2 == 0 {
            xs.swap(i, k - 1);
        } else {
            xs.swap(0, k - 1);
        }
    }
}

/// Every valid quadrangulation obtained from `map` by adding one vertex and
/// `extra_edges` new edges inside the given face, found by trying all ways
/// of splicing the fresh darts into the rotation system. "Inside the face"
/// means every other face's dart orbit survives unchanged, which restricts
/// the splice anchors to the face's corners. Independent of the split
/// surgery; used to cross-check it. With three extra edges the result is
/// provably empty (face-count parity), which the caller can assert.
pub fn face_extensions(map: &EmbeddedMap, face: usize, extra_edges: usize) -> Vec<EmbeddedMap> {
    assert!(extra_edges == 2 || extra_edges == 3);
    let nd = map.dart_count();
    let k = 2 * extra_edges;
    let anchors: Vec<Dart> = map
        .face_orbit(map.face_rep(face))
        .into_iter()
        .map(|f| map.alpha(f))
        .collect();
    let mut sigma: Vec<usize> = (0..nd + k)
        .map(|d| if d < nd { map.sigma(d) } else { usize::MAX })
        .collect();
    let mut placed: Vec<Dart> = Vec::new();
    let mut results = Vec::new();
    place_next(
        map, &anchors, nd, k, false, &mut sigma, &mut placed, &mut results,
    );
    results
}

fn place_next(
    map: &EmbeddedMap,
    anchors: &[Dart],
    nd: usize,
    k: usize,
    orbit_started: bool,
    sigma: &mut Vec<usize>,
    placed: &mut Vec<Dart>,
    results: &mut Vec<EmbeddedMap>,
) {
    let x = nd + placed.len();
    if placed.len() == k {
        if orbit_started && quadrangulated(sigma) {
            let cand = EmbeddedMap::from_sigma(sigma.clone()).expect("permutation by construction");
            if cand.validate().is_empty() {
                debug_assert_eq!(cand.vertex_count(), map.vertex_count() + 1);
                results.push(cand);
            }
        }
        return;
    }
    if !orbit_started {
        sigma[x] = x;
        placed.push(x);
        place_next(map, anchors, nd, k, true, sigma, placed, results);
        placed.pop();
        sigma[x] = usize::MAX;
    }
    for i in 0..anchors.len() + placed.len() {
        let y = if i < anchors.len() {
            anchors[i]
        } else {
            placed[i - anchors.len()]
        };
        sigma[x] = sigma[y];
        sigma[y] = x;
        placed.push(x);
        place_next(map, anchors, nd, k, orbit_started, sigma, placed, results);
        placed.pop();
        sigma[y] = sigma[x];
        sigma[x] = usize::MAX;
    }
}

/// All orbits of sigma∘alpha have length 4.
fn quadrangulated(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut d = start;
        let mut len = 0;
        loop {
            seen[d] = true;
            d = sigma[d ^ 1];
            len += 1;
            if d == start {
                break;
            }
            if len > 4 {
                return false;
            }
        }
        if len != 4 {
            return false;
        }
    }
    true
}

/// The rotation system restricted to darts below `cutoff`: each surviving
/// dart's successor is its first successor under sigma that also survives.
/// Surgery tests use this to check that a split leaves the original map
/// intact dart-for-dart.
pub fn truncated_sigma(map: &EmbeddedMap, cutoff: usize) -> Vec<Dart> {
    assert!(cutoff % 2 == 0 && cutoff <= map.dart_count());
    (0..cutoff)
        .map(|d| {
            let mut x = map.sigma(d);
            while x >= cutoff {
                x = map.sigma(x);
            }
            x
        })
        .collect()
}
