//! Vertex splitting, face contraction, and the contractibility predicates.
//!
//! A split is specified by a walk at a vertex: a clockwise fan of darts from
//! `d_first` to `d_last`. The fan's interior moves to a fresh vertex `w`,
//! which is tied back to the endpoints' far vertices by two fresh edges,
//! creating one new quadrilateral face. Contraction is the inverse: pick a
//! face and one of its two diagonals, identify the diagonal's corners and
//! merge the boundary edges pairwise. Contraction validity is decided by
//! validating the result rather than by a precondition catalogue.

use crate::error::{format_violations, Error, Result};
use crate::map::{Colouring, Dart, EmbeddedMap};

/// The walk `n1 e1 v em nm`: a clockwise fan at `vertex` from `d_first`
/// (edge e1 toward n1) to `d_last` (edge em toward nm). The fan size m is
/// 1 + the clockwise distance from `d_first` to `d_last`; m = 1 when they
/// coincide. The reversed walk denotes the reflected result of the same
/// operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplitWalk {
    pub vertex: usize,
    pub d_first: Dart,
    pub d_last: Dart,
}

impl SplitWalk {
    pub fn reversed(&self) -> SplitWalk {
        SplitWalk {
            vertex: self.vertex,
            d_first: self.d_last,
            d_last: self.d_first,
        }
    }

    /// Fan size m; errors when the darts do not belong to `vertex`.
    pub fn m(&self, map: &EmbeddedMap) -> Result<usize> {
        Ok(self.fan(map)?.len())
    }

    fn fan(&self, map: &EmbeddedMap) -> Result<Vec<Dart>> {
        let check = |d: Dart| {
            if d >= map.dart_count() || map.vertex_of(d) != self.vertex {
                return Err(Error::InvalidWalk(format!(
                    "dart {d} does not belong to vertex {}",
                    self.vertex
                )));
            }
            Ok(())
        };
        check(self.d_first)?;
        check(self.d_last)?;
        let mut fan = vec![self.d_first];
        let mut x = self.d_first;
        while x != self.d_last {
            x = map.sigma(x);
            fan.push(x);
        }
        Ok(fan)
    }
}

/// min(m, d(v) − m + 2): the smaller of the two vertex degrees the split
/// produces.
pub fn degree_of_split(map: &EmbeddedMap, walk: &SplitWalk) -> Result<usize> {
    let m = walk.m(map)?;
    let d = map.degree(walk.vertex);
    Ok(m.min(d - m + 2))
}

/// Every walk (vertex, d_first, d_last) whose degree lies in [lo, hi]. Both
/// orientations of each walk are emitted; callers dedup results. Order is
/// deterministic: by vertex, then by rotation position of each endpoint.
pub fn enumerate_splits(map: &EmbeddedMap, lo: usize, hi: usize) -> Vec<SplitWalk> {
    assert!(1 <= lo && lo <= hi);
    let mut out = Vec::new();
    for v in map.vertices() {
        let rot: Vec<Dart> = map.rotation(v).collect();
        let d = rot.len();
        for a in 0..d {
            for b in 0..d {
                let m = (b + d - a) % d + 1;
                let deg = m.min(d - m + 2);
                if lo <= deg && deg <= hi {
                    out.push(SplitWalk {
                        vertex: v,
                        d_first: rot[a],
                        d_last: rot[b],
                    });
                }
            }
        }
    }
    out
}

/// Split `map` along `walk`. The result has one more vertex, two more edges
/// and one more face, and is always a valid quadrangulation when the input
/// is one. Every input dart keeps its identity; the four new darts take the
/// next free ids. The walk is canonicalised to the orientation with the
/// smaller fan first, so splits of degree ≤ 2 leave the input's rotation
/// system intact dart-for-dart (the monotone case).
pub fn split(map: &EmbeddedMap, walk: &SplitWalk) -> Result<EmbeddedMap> {
    let fan = walk.fan(map)?;
    let d = map.degree(walk.vertex);
    let m = fan.len();
    if 2 * m > d + 2 {
        return split(map, &walk.reversed());
    }

    let nd = map.dart_count();
    let mut rot: Vec<Vec<Dart>> = map
        .vertices()
        .map(|v| map.rotation(v).collect())
        .collect();
    let s1 = map.alpha(fan[0]);
    let sm = map.alpha(fan[m - 1]);
    let n1 = map.vertex_of(s1);
    let nm = map.vertex_of(sm);

    if m == 1 {
        // Pendant w hangs off n1; a second fresh edge doubles e1 at v.
        let (a, a_star, c, c_star) = (nd, nd + 1, nd + 2, nd + 3);
        let vr = &mut rot[walk.vertex];
        let p = position(vr, fan[0]);
        vr.insert(p + 1, c);
        let r1 = &mut rot[n1];
        let p = position(r1, s1);
        r1.splice(p..p, [c_star, a_star]);
        rot.push(vec![a]);
    } else {
        let (a, a_star, b, b_star) = (nd, nd + 1, nd + 2, nd + 3);
        // v keeps the fan endpoints and the complement; w takes the interior
        // framed by the two fresh darts.
        let full: Vec<Dart> = map.rotation_from(fan[0]).collect();
        let mut vr = vec![fan[0], fan[m - 1]];
        vr.extend_from_slice(&full[m..]);
        rot[walk.vertex] = vr;
        let mut wr = vec![a];
        wr.extend_from_slice(&fan[1..m - 1]);
        wr.push(b);
        // a* lands immediately before s1, then b* immediately after sm; this
        // order keeps both adjacencies even when n1 and nm coincide.
        let r1 = &mut rot[n1];
        let p = position(r1, s1);
        r1.insert(p, a_star);
        let rm = &mut rot[nm];
        let p = position(rm, sm);
        rm.insert(p + 1, b_star);
        rot.push(wr);
    }

    let mut sigma = vec![0; nd + 4];
    for r in &rot {
        for (i, &x) in r.iter().enumerate() {
            sigma[x] = r[(i + 1) % r.len()];
        }
    }
    let out = EmbeddedMap::from_sigma(sigma)?;
    debug_assert!(out.validate().is_empty(), "split broke an invariant");
    Ok(out)
}

fn position(rot: &[Dart], d: Dart) -> usize {
    rot.iter().position(|&x| x == d).expect("dart in rotation")
}

/// A face (any dart of its orbit) plus the choice of diagonal: axis 0
/// identifies the corners at the dart and two steps along the boundary,
/// axis 1 the other pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionSite {
    pub face_dart: Dart,
    pub axis: usize,
}

/// One site per (face, diagonal) pair, faces in id order, frame anchored at
/// the face's representative dart.
pub fn contraction_sites(map: &EmbeddedMap) -> Vec<ContractionSite> {
    (0..map.face_count())
        .flat_map(|f| {
            let d = map.face_rep(f);
            [0, 1].map(|axis| ContractionSite { face_dart: d, axis })
        })
        .collect()
}

fn frame(map: &EmbeddedMap, site: &ContractionSite) -> Result<[Dart; 4]> {
    if site.axis > 1 {
        return Err(Error::InvalidContraction(format!(
            "axis must be 0 or 1, got {}",
            site.axis
        )));
    }
    if site.face_dart >= map.dart_count() {
        return Err(Error::InvalidContraction(format!(
            "dart {} out of range",
            site.face_dart
        )));
    }
    let orbit: Vec<Dart> = map.face_orbit(site.face_dart);
    if orbit.len() != 4 {
        return Err(Error::InvalidContraction(format!(
            "face walk has length {}, not 4",
            orbit.len()
        )));
    }
    let mut g = [orbit[0], orbit[1], orbit[2], orbit[3]];
    if site.axis == 1 {
        g.rotate_left(1);
    }
    Ok(g)
}

/// min of the two axis-corner degrees — the degree of the split this
/// contraction inverts.
pub fn contraction_degree(map: &EmbeddedMap, site: &ContractionSite) -> Result<usize> {
    let g = frame(map, site)?;
    let d1 = map.degree(map.vertex_of(g[0]));
    let d3 = map.degree(map.vertex_of(g[2]));
    Ok(d1.min(d3))
}

pub fn contract(map: &EmbeddedMap, site: &ContractionSite) -> Result<EmbeddedMap> {
    contract_traced(map, site).map(|(out, _)| out)
}

/// Contraction that also tracks colours: the merged vertex inherits the
/// (shared) colour of the identified corners.
pub fn contract_coloured(
    map: &EmbeddedMap,
    colouring: &Colouring,
    site: &ContractionSite,
) -> Result<(EmbeddedMap, Colouring)> {
    let (out, back) = contract_traced(map, site)?;
    let colours = (0..out.vertex_count())
        .map(|v| colouring.colour(map.vertex_of(back[out.vertex_rep(v)])))
        .collect();
    Ok((out, Colouring::new(colours)))
}

/// Returns the contracted map and, per surviving dart (new id), the dart it
/// was in the input.
fn contract_traced(map: &EmbeddedMap, site: &ContractionSite) -> Result<(EmbeddedMap, Vec<Dart>)> {
    let mut g = frame(map, site)?;
    if map.vertex_of(g[0]) == map.vertex_of(g[2]) {
        return Err(Error::InvalidContraction(
            "diagonal corners are the same vertex".into(),
        ));
    }
    let pend0 = g[0] == map.alpha(g[3]);
    let pend2 = g[2] == map.alpha(g[1]);
    if pend0 && pend2 {
        return Err(Error::InvalidContraction(
            "both diagonal corners are pendant; the map would collapse to a single edge".into(),
        ));
    }
    if pend0 {
        // Put the pendant corner at position 2 so one code path handles it.
        g.rotate_left(2);
    }
    let x: Vec<usize> = g.iter().map(|&d| map.vertex_of(d)).collect();

    let mut rot: Vec<Vec<Dart>> = map
        .vertices()
        .map(|v| map.rotation(v).collect())
        .collect();
    let dead: [Dart; 4];
    if g[2] == map.alpha(g[1]) {
        // Pendant corner: its doubled boundary edge dies together with the
        // edge it was parallel to.
        dead = [g[0], map.alpha(g[0]), g[1], g[2]];
        rot[x[0]].retain(|&t| t != g[0]);
        rot[x[1]].retain(|&t| t != g[1] && t != map.alpha(g[0]));
        rot[x[2]].clear();
    } else {
        dead = [g[1], map.alpha(g[1]), g[2], map.alpha(g[2])];
        // The far corner's surviving darts fan into the near corner's face
        // gap, which sits right before g[0] in its rotation.
        let far: Vec<Dart> = map.rotation_from(g[2]).collect();
        let chain = &far[1..far.len() - 1];
        let near = &mut rot[x[0]];
        let gap = position(near, g[0]);
        near.splice(gap..gap, chain.iter().copied());
        rot[x[2]].clear();
        rot[x[1]].retain(|&t| t != g[1]);
        rot[x[3]].retain(|&t| t != map.alpha(g[2]));
    }

    // Dead darts form whole edges, so order-preserving compaction keeps the
    // d / d^1 pairing aligned.
    let nd = map.dart_count();
    let mut id = vec![usize::MAX; nd];
    let mut back = Vec::with_capacity(nd - 4);
    for d in 0..nd {
        if !dead.contains(&d) {
            id[d] = back.len();
            back.push(d);
        }
    }
    let mut sigma = vec![0; nd - 4];
    for r in &rot {
        for (i, &t) in r.iter().enumerate() {
            sigma[id[t]] = id[r[(i + 1) % r.len()]];
        }
    }
    let out = EmbeddedMap::from_sigma(sigma)?;
    let violations = out.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidContraction(format_violations(&violations)));
    }
    Ok((out, back))
}

/// Does some valid contraction of degree exactly `k` exist?
pub fn is_k_contractible(map: &EmbeddedMap, k: usize) -> bool {
    contraction_sites(map).iter().any(|site| {
        contraction_degree(map, site).is_ok_and(|deg| deg == k) && contract(map, site).is_ok()
    })
}

/// No valid contraction of degree 1 or 2 exists.
pub fn is_irreducible(map: &EmbeddedMap) -> bool {
    !is_k_contractible(map, 1) && !is_k_contractible(map, 2)
}
