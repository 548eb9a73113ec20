//! Named constructions: seed maps, wheels, polyhedral skeletons and the
//! radial (vertex-face incidence) map.

use super::{Colour, Colouring, EmbeddedMap};
use crate::error::{Error, Result};

/// The path on three vertices, the unique multiquadrangulation on n = 3.
/// Darts: edge {0,1} joins a leaf to the centre, edge {2,3} the centre to
/// the other leaf; the single face walk repeats both edges.
pub fn p2() -> EmbeddedMap {
    EmbeddedMap::from_sigma(vec![0, 2, 1, 3]).unwrap()
}

/// The 4-cycle.
pub fn c4() -> EmbeddedMap {
    EmbeddedMap::from_rotations(&[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap()
}

/// Splitting the centre of `p2` one-sidedly yields this map: two vertices of
/// degree 3 joined by a doubled edge, each carrying one pendant vertex---cf.
/// the degree sequence (3,3,1,1). It is the smaller of the two
/// non-isomorphic results of pulling one edge out of the centre.
pub fn q3() -> EmbeddedMap {
    EmbeddedMap::from_sigma(vec![7, 6, 1, 3, 4, 0, 2, 5]).unwrap()
}

/// Splitting a leaf of `p2` yields this map: degree sequence (4,2,1,1) with
/// a doubled edge at the degree-4 vertex.
pub fn q4() -> EmbeddedMap {
    EmbeddedMap::from_sigma(vec![6, 2, 7, 3, 4, 1, 0, 5]).unwrap()
}

/// The pseudo-double wheel on n = 2k + 2 vertices: a 2k-cycle together with
/// an inner hub adjacent to the odd-numbered cycle vertices and an outer hub
/// adjacent to the even-numbered ones. Requires k >= 3.
pub fn pseudo_double_wheel(k: usize) -> Result<EmbeddedMap> {
    if k < 3 {
        return Err(Error::InvalidWalk(format!(
            "pseudo-double wheel needs k >= 3, got {k}"
        )));
    }
    let cycle = 2 * k;
    let inner = cycle;
    let outer = cycle + 1;
    let mut rotations = Vec::with_capacity(cycle + 2);
    for i in 0..cycle {
        let next = (i + 1) % cycle;
        let prev = (i + cycle - 1) % cycle;
        if i % 2 == 0 {
            rotations.push(vec![next, outer, prev]);
        } else {
            rotations.push(vec![next, prev, inner]);
        }
    }
    // Inner hub: odd cycle vertices in decreasing order; outer hub: even
    // cycle vertices in increasing order. Together with the per-vertex
    // rotations above this closes every face walk at length 4.
    let mut inner_rot = vec![1];
    let mut i = cycle - 1;
    while i > 1 {
        inner_rot.push(i);
        i -= 2;
    }
    rotations.push(inner_rot);
    rotations.push((0..cycle).step_by(2).collect());
    EmbeddedMap::from_rotations(&rotations)
}

/// Skeleton of a pyramid over a k-gon: a k-cycle plus an apex joined to
/// every cycle vertex. Faces are k triangles and one k-gon. Requires k >= 3.
pub fn pyramid(k: usize) -> Result<EmbeddedMap> {
    if k < 3 {
        return Err(Error::InvalidWalk(format!(
            "pyramid needs a base of k >= 3 vertices, got {k}"
        )));
    }
    let apex = k;
    let mut rotations = Vec::with_capacity(k + 1);
    for i in 0..k {
        rotations.push(vec![(i + 1) % k, (i + k - 1) % k, apex]);
    }
    let mut apex_rot = vec![0];
    let mut i = k - 1;
    while i > 0 {
        apex_rot.push(i);
        i -= 1;
    }
    rotations.push(apex_rot);
    EmbeddedMap::from_rotations(&rotations)
}

/// Skeleton of the tetrahedron (pyramid over a triangle).
pub fn tetrahedron() -> EmbeddedMap {
    pyramid(3).unwrap()
}

/// Skeleton of the cube: vertices 0..4 around the top face, 4..8 around the
/// bottom, vertex i above vertex i + 4.
pub fn cube() -> EmbeddedMap {
    let rotations: Vec<Vec<usize>> = (0..8)
        .map(|i| {
            if i < 4 {
                vec![(i + 1) % 4, i + 4, (i + 3) % 4]
            } else {
                let j = i - 4;
                vec![(j + 3) % 4 + 4, j, (j + 1) % 4 + 4]
            }
        })
        .collect();
    EmbeddedMap::from_rotations(&rotations).unwrap()
}

/// The radial map of a connected loopless spherical map `g`: one vertex per
/// vertex of `g`, one per face of `g`, one edge per corner. The result is
/// always a multiquadrangulation; vertex-images are coloured `Unstable` and
/// face-images `Stable`.
pub fn radial(g: &EmbeddedMap) -> Result<(EmbeddedMap, Colouring)> {
    let violations: Vec<_> = g
        .validate()
        .into_iter()
        .filter(|v| {
            matches!(
                v,
                super::Violation::Empty
                    | super::Violation::Loop { .. }
                    | super::Violation::Disconnected
                    | super::Violation::NotSpherical { .. }
            )
        })
        .collect();
    if !violations.is_empty() {
        return Err(Error::BadRadialInput(violations));
    }
    // Corner d of g becomes radial edge {2d, 2d+1}: dart 2d at the
    // vertex-image of vertex_of(d), dart 2d+1 at the face-image of
    // face_of(d). Around a vertex-image the corners follow sigma; around a
    // face-image they follow the reversed face walk, which closes every
    // radial face after exactly four darts.
    let n = g.dart_count();
    let mut sigma = vec![0; 2 * n];
    for d in 0..n {
        sigma[2 * d] = 2 * g.sigma(d);
        sigma[2 * d + 1] = 2 * g.phi_inv(d) + 1;
    }
    let map = EmbeddedMap::from_sigma(sigma)?;
    let colours = map
        .vertices()
        .map(|v| {
            if map.vertex_rep(v) % 2 == 0 {
                Colour::Unstable
            } else {
                Colour::Stable
            }
        })
        .collect();
    Ok((map, Colouring::new(colours)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{is_3_connected, is_simple};

    #[test]
    fn pseudo_double_wheels_are_three_regular_quadrangulations() {
        for k in 3..=8 {
            let m = pseudo_double_wheel(k).unwrap();
            assert_eq!(m.vertex_count(), 2 * k + 2, "k={k}");
            assert!(m.is_valid_quadrangulation(), "k={k}: {:?}", m.validate());
            assert!(m.degrees().iter().all(|&d| d >= 3), "k={k}");
            assert!(is_simple(&m), "k={k}");
            assert!(is_3_connected(&m), "k={k}");
        }
        assert!(pseudo_double_wheel(2).is_err());
    }

    #[test]
    fn pyramid_skeletons_are_wheels() {
        for k in 3..=6 {
            let m = pyramid(k).unwrap();
            assert_eq!(m.vertex_count(), k + 1);
            assert_eq!(m.edge_count(), 2 * k);
            assert_eq!(m.face_count(), k + 1);
            assert_eq!(m.euler_characteristic(), 2);
            assert!(m.is_connected());
            assert!(is_simple(&m));
            assert!(is_3_connected(&m));
        }
    }

    #[test]
    fn cube_skeleton_has_six_quadrilateral_faces() {
        let m = cube();
        assert_eq!(m.vertex_count(), 8);
        assert_eq!(m.edge_count(), 12);
        assert_eq!(m.face_count(), 6);
        assert!((0..m.face_count()).all(|f| m.face_len(f) == 4));
        assert!(is_simple(&m));
        assert!(is_3_connected(&m));
    }

    #[test]
    fn radial_of_single_edge_is_p2() {
        let edge = EmbeddedMap::from_sigma(vec![0, 1]).unwrap();
        let (r, colouring) = radial(&edge).unwrap();
        assert!(r.is_valid_quadrangulation());
        assert_eq!(r.vertex_count(), 3);
        // Two vertex-images (unstable) and one face-image (stable).
        assert_eq!(colouring.stable_count(), 1);
        assert_eq!(colouring.unstable_count(), 2);
    }

    #[test]
    fn radial_counts_vertices_faces_and_corners() {
        let t = tetrahedron();
        let (r, colouring) = radial(&t).unwrap();
        assert!(r.is_valid_quadrangulation());
        assert_eq!(r.vertex_count(), t.vertex_count() + t.face_count());
        assert_eq!(r.edge_count(), 2 * t.edge_count());
        assert_eq!(colouring.unstable_count(), t.vertex_count());
        assert_eq!(colouring.stable_count(), t.face_count());
        assert!(colouring.is_proper(&r));
        assert_eq!(r.min_degree(), 3);
    }

    #[test]
    fn radial_rejects_disconnected_input() {
        let two_edges = EmbeddedMap::from_sigma(vec![0, 1, 2, 3]).unwrap();
        assert!(radial(&two_edges).is_err());
    }
}
