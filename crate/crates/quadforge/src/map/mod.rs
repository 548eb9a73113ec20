//! Combinatorial maps on the sphere.
//!
//! A map is stored as a rotation system over darts `0..2m`. The edge
//! involution is implicit: the partner of dart `d` is `d ^ 1`, so darts
//! `2e` and `2e+1` always form edge `e`. The permutation `sigma` gives the
//! next dart in clockwise order around the vertex of `d`, and face walks
//! are the orbits of `phi = sigma ∘ alpha`. A multiquadrangulation is a
//! connected loopless map in which every face walk has length exactly 4;
//! parallel edges are allowed throughout.

mod build;
mod check;

pub use build::{c4, cube, p2, pseudo_double_wheel, pyramid, q3, q4, radial, tetrahedron};
pub use check::{has_separating_4cycle, is_3_connected, is_simple};

use crate::error::{Error, Result};

pub type Dart = usize;

/// Ways a dart structure can fail to be a multiquadrangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    Loop { edge: usize },
    Disconnected,
    /// Euler characteristic n - m + f differs from 2.
    NotSpherical { euler: i64 },
    FaceLength { dart: Dart, len: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Empty => write!(f, "map has no darts"),
            Violation::Loop { edge } => write!(f, "edge {edge} is a loop"),
            Violation::Disconnected => write!(f, "map is disconnected"),
            Violation::NotSpherical { euler } => {
                write!(f, "Euler characteristic is {euler}, expected 2")
            }
            Violation::FaceLength { dart, len } => {
                write!(f, "face through dart {dart} has length {len}, expected 4")
            }
        }
    }
}

/// An embedded multigraph: rotation system plus the implicit edge pairing.
///
/// Construction only checks that `sigma` is a permutation of an even dart
/// set; everything else (looplessness, connectivity, sphericity, face
/// lengths) is reported by [`EmbeddedMap::validate`] so that broken maps can
/// be inspected rather than merely rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    /// Dart -> vertex id. Vertices are numbered by their smallest dart.
    vertex_of: Vec<usize>,
    /// Vertex id -> smallest dart of its rotation.
    vertex_rep: Vec<Dart>,
    /// Dart -> face id. Faces are numbered by their smallest dart.
    face_of: Vec<usize>,
    /// Face id -> smallest dart of its walk.
    face_rep: Vec<Dart>,
}

impl EmbeddedMap {
    pub fn from_sigma(sigma: Vec<Dart>) -> Result<Self> {
        if sigma.len() % 2 != 0 {
            return Err(Error::OddDartCount(sigma.len()));
        }
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &d in &sigma {
            if d >= n || seen[d] {
                return Err(Error::NotPermutation);
            }
            seen[d] = true;
        }
        let mut sigma_inv = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }
        let (vertex_of, vertex_rep) = orbit_tables(&sigma);
        let phi: Vec<Dart> = (0..n).map(|d| sigma[d ^ 1]).collect();
        let (face_of, face_rep) = orbit_tables(&phi);
        Ok(EmbeddedMap {
            sigma,
            sigma_inv,
            vertex_of,
            vertex_rep,
            face_of,
            face_rep,
        })
    }

    /// Build a simple map from per-vertex neighbour lists in rotation order.
    /// Each adjacency must appear exactly once from both sides; parallel
    /// edges are rejected because their pairing would be ambiguous.
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self> {
        let nv = rotations.len();
        // Position of each (u, v) adjacency in u's list, unique by simplicity.
        let mut pos = std::collections::HashMap::new();
        for (u, rot) in rotations.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                if v >= nv || v == u {
                    return Err(Error::AmbiguousRotations);
                }
                if pos.insert((u, v), i).is_some() {
                    return Err(Error::AmbiguousRotations);
                }
            }
        }
        // Assign edge ids scanning vertices in order; dart 2e sits at the
        // lower-numbered endpoint.
        let mut dart_at = vec![Vec::new(); nv];
        for (u, rot) in rotations.iter().enumerate() {
            dart_at[u] = vec![0; rot.len()];
        }
        let mut next_edge = 0;
        for (u, rot) in rotations.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                if u < v {
                    let j = *pos.get(&(v, u)).ok_or(Error::AmbiguousRotations)?;
                    dart_at[u][i] = 2 * next_edge;
                    dart_at[v][j] = 2 * next_edge + 1;
                    next_edge += 1;
                } else if pos.get(&(v, u)).is_none() {
                    return Err(Error::AmbiguousRotations);
                }
            }
        }
        let mut sigma = vec![0; 2 * next_edge];
        for darts in &dart_at {
            for (i, &d) in darts.iter().enumerate() {
                sigma[d] = darts[(i + 1) % darts.len()];
            }
        }
        Self::from_sigma(sigma)
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_rep.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_rep.len()
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    /// Next dart along the face walk through `d`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[d ^ 1]
    }

    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d] ^ 1
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    pub fn vertex_rep(&self, v: usize) -> Dart {
        self.vertex_rep[v]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn face_rep(&self, f: usize) -> Dart {
        self.face_rep[f]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_rep.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation(v).count()
    }

    /// Darts around vertex `v` in clockwise order, starting at its smallest.
    pub fn rotation(&self, v: usize) -> OrbitIter<'_> {
        OrbitIter::new(&self.sigma, self.vertex_rep[v])
    }

    /// Darts around the vertex of `d` in clockwise order, starting at `d`.
    pub fn rotation_from(&self, d: Dart) -> OrbitIter<'_> {
        OrbitIter::new(&self.sigma, d)
    }

    /// The face walk through `d`, starting at `d`.
    pub fn face_orbit(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut x = self.phi(d);
        while x != d {
            walk.push(x);
            x = self.phi(x);
        }
        walk
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.face_orbit(self.face_rep[f]).len()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation(v).map(move |d| self.vertex_of[d ^ 1])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        if self.dart_count() == 0 {
            return false;
        }
        let mut seen = vec![false; self.dart_count()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 0;
        while let Some(d) = stack.pop() {
            count += 1;
            for next in [self.sigma[d], d ^ 1] {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        count == self.dart_count()
    }

    /// Report every violated multiquadrangulation invariant.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.dart_count() == 0 {
            out.push(Violation::Empty);
            return out;
        }
        for e in 0..self.edge_count() {
            if self.vertex_of[2 * e] == self.vertex_of[2 * e + 1] {
                out.push(Violation::Loop { edge: e });
            }
        }
        if !self.is_connected() {
            out.push(Violation::Disconnected);
        } else {
            let euler = self.euler_characteristic();
            if euler != 2 {
                out.push(Violation::NotSpherical { euler });
            }
        }
        for f in 0..self.face_count() {
            let len = self.face_len(f);
            if len != 4 {
                out.push(Violation::FaceLength {
                    dart: self.face_rep[f],
                    len,
                });
            }
        }
        out
    }

    pub fn is_valid_quadrangulation(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_quadrangulation(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidMap(violations))
        }
    }

    /// Apply a dart relabelling. The permutation must map edge pairs to edge
    /// pairs, i.e. `perm[d ^ 1] == perm[d] ^ 1`.
    pub fn relabelled(&self, perm: &[Dart]) -> Result<Self> {
        if perm.len() != self.dart_count() {
            return Err(Error::NotPermutation);
        }
        for d in 0..perm.len() {
            if perm[d ^ 1] != perm[d] ^ 1 {
                return Err(Error::NotPermutation);
            }
        }
        let mut sigma = vec![0; perm.len()];
        for d in 0..perm.len() {
            sigma[perm[d]] = perm[self.sigma[d]];
        }
        Self::from_sigma(sigma)
    }
}

/// Iterator over a sigma-orbit starting from a given dart.
pub struct OrbitIter<'a> {
    sigma: &'a [Dart],
    start: Dart,
    current: Option<Dart>,
}

impl<'a> OrbitIter<'a> {
    fn new(sigma: &'a [Dart], start: Dart) -> Self {
        OrbitIter {
            sigma,
            start,
            current: Some(start),
        }
    }
}

impl Iterator for OrbitIter<'_> {
    type Item = Dart;

    fn next(&mut self) -> Option<Dart> {
        let d = self.current?;
        let next = self.sigma[d];
        self.current = if next == self.start { None } else { Some(next) };
        Some(d)
    }
}

fn orbit_tables(perm: &[Dart]) -> (Vec<usize>, Vec<Dart>) {
    let mut orbit_of = vec![usize::MAX; perm.len()];
    let mut reps = Vec::new();
    for start in 0..perm.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        let mut d = start;
        loop {
            orbit_of[d] = id;
            d = perm[d];
            if d == start {
                break;
            }
        }
    }
    (orbit_of, reps)
}

/// Equilibrium colour of a vertex: stable points and unstable points of the
/// quasi-dual reading of a quadrangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Stable,
    Unstable,
}

impl Colour {
    pub fn swapped(self) -> Colour {
        match self {
            Colour::Stable => Colour::Unstable,
            Colour::Unstable => Colour::Stable,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Stable => 'S',
            Colour::Unstable => 'U',
        }
    }
}

/// A 2-colouring of the vertices of a map, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        Colouring { colours }
    }

    /// The two proper 2-colourings of a connected bipartite map; the first
    /// colours vertex 0 `Stable`. Fails on odd cycles.
    pub fn bipartitions(map: &EmbeddedMap) -> Result<(Colouring, Colouring)> {
        let n = map.vertex_count();
        if n == 0 {
            return Err(Error::NotBipartite);
        }
        let mut colours = vec![None; n];
        colours[0] = Some(Colour::Stable);
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let c = colours[v].unwrap();
            for w in map.neighbours(v) {
                match colours[w] {
                    None => {
                        colours[w] = Some(c.swapped());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        if colours.iter().any(|c| c.is_none()) {
            return Err(Error::NotBipartite);
        }
        let first = Colouring {
            colours: colours.into_iter().map(|c| c.unwrap()).collect(),
        };
        let second = first.swapped();
        Ok((first, second))
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn swapped(&self) -> Colouring {
        Colouring {
            colours: self.colours.iter().map(|c| c.swapped()).collect(),
        }
    }

    pub fn stable_count(&self) -> usize {
        self.colours.iter().filter(|c| **c == Colour::Stable).count()
    }

    pub fn unstable_count(&self) -> usize {
        self.colours.len() - self.stable_count()
    }

    /// Both endpoints of every edge must receive different colours.
    pub fn is_proper(&self, map: &EmbeddedMap) -> bool {
        self.colours.len() == map.vertex_count()
            && (0..map.edge_count()).all(|e| {
                self.colours[map.vertex_of(2 * e)] != self.colours[map.vertex_of(2 * e + 1)]
            })
    }
}
