//! Canonical codes for unsensed, unrooted map isomorphism.
//!
//! From every start dart and both traversal orientations (clockwise and
//! anticlockwise) the map is relabelled breadth-first: vertices in discovery
//! order, each vertex's darts labelled consecutively in rotation order from
//! its entry dart. The emitted record per vertex is its degree, optionally
//! its colour, then the labels of the partner darts across each incident
//! edge in rotation order. The canonical code is the lexicographic minimum
//! over all `2 * (2m)` starts; two maps get the same code iff they are
//! isomorphic as maps of the sphere up to reflection (and colour, when
//! colour-aware). The code fully determines the map, so a canonical
//! representative can be rebuilt from it.

use crate::map::{Colour, Colouring, Dart, EmbeddedMap};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    colour_aware: bool,
    code: Vec<u32>,
}

impl CanonicalCode {
    pub fn colour_aware(&self) -> bool {
        self.colour_aware
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.code
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, x) in self.code.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Scratch state reused across the starts of one canonicalisation.
struct Search<'a> {
    map: &'a EmbeddedMap,
    colours: Option<&'a Colouring>,
    /// Position of each dart in its vertex's reference rotation.
    pos: Vec<u32>,
    deg: Vec<u32>,
    base: Vec<u32>,
    entry: Vec<Dart>,
    discovered_at: Vec<u32>,
    epoch: u32,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(map: &'a EmbeddedMap, colours: Option<&'a Colouring>) -> Self {
        let mut pos = vec![0u32; map.dart_count()];
        let deg: Vec<u32> = map.vertices().map(|v| map.degree(v) as u32).collect();
        for v in map.vertices() {
            for (i, d) in map.rotation(v).enumerate() {
                pos[d] = i as u32;
            }
        }
        let nv = map.vertex_count();
        Search {
            map,
            colours,
            pos,
            deg,
            base: vec![0; nv],
            entry: vec![0; nv],
            discovered_at: vec![0; nv],
            epoch: 0,
            order: Vec::with_capacity(nv),
        }
    }

    /// Generate the code for one start into `out`, comparing against `best`
    /// as it goes. Returns false as soon as the candidate is lexicographically
    /// larger (out is then truncated mid-way) and true if it is strictly
    /// smaller; an exact tie returns false.
    fn run(&mut self, start: Dart, reversed: bool, best: &[u32], out: &mut Vec<u32>) -> bool {
        let map = self.map;
        self.epoch += 1;
        self.order.clear();
        out.clear();
        let mut winning = best.is_empty();
        let mut next_base = 0u32;
        let discover = |s: &mut Search<'_>, d: Dart, next_base: &mut u32| {
            let v = s.map.vertex_of(d);
            s.discovered_at[v] = s.epoch;
            s.entry[v] = d;
            s.base[v] = *next_base;
            *next_base += s.deg[v];
            s.order.push(v);
        };
        discover(self, start, &mut next_base);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            let entry = self.entry[v];
            let deg = self.deg[v];
            let mut push = |val: u32, out: &mut Vec<u32>| -> bool {
                let i = out.len();
                out.push(val);
                if !winning {
                    if val > best[i] {
                        return false;
                    }
                    if val < best[i] {
                        winning = true;
                    }
                }
                true
            };
            if !push(deg, out) {
                return false;
            }
            if let Some(colours) = self.colours {
                let bit = match colours.colour(v) {
                    Colour::Stable => 0,
                    Colour::Unstable => 1,
                };
                if !push(bit, out) {
                    return false;
                }
            }
            let mut x = entry;
            for _ in 0..deg {
                let t = map.alpha(x);
                let vt = map.vertex_of(t);
                let label = if self.discovered_at[vt] == self.epoch {
                    let e = self.entry[vt];
                    let offset = if reversed {
                        (self.pos[e] + self.deg[vt] - self.pos[t]) % self.deg[vt]
                    } else {
                        (self.pos[t] + self.deg[vt] - self.pos[e]) % self.deg[vt]
                    };
                    self.base[vt] + offset
                } else {
                    let b = next_base;
                    self.discovered_at[vt] = self.epoch;
                    self.entry[vt] = t;
                    self.base[vt] = b;
                    next_base += self.deg[vt];
                    self.order.push(vt);
                    b
                };
                if !push(label, out) {
                    return false;
                }
                x = if reversed { map.sigma_inv(x) } else { map.sigma(x) };
            }
        }
        winning
    }
}

fn canonicalise(map: &EmbeddedMap, colours: Option<&Colouring>) -> CanonicalCode {
    let colour_aware = colours.is_some();
    if map.dart_count() == 0 {
        return CanonicalCode {
            colour_aware,
            code: Vec::new(),
        };
    }
    debug_assert!(map.is_connected());
    let mut search = Search::new(map, colours);
    let mut best: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    for start in 0..map.dart_count() {
        for reversed in [false, true] {
            if search.run(start, reversed, &best, &mut scratch) {
                std::mem::swap(&mut best, &mut scratch);
            }
        }
    }
    CanonicalCode {
        colour_aware,
        code: best,
    }
}

pub fn canonical_code(map: &EmbeddedMap) -> CanonicalCode {
    canonicalise(map, None)
}

pub fn canonical_code_coloured(map: &EmbeddedMap, colouring: &Colouring) -> CanonicalCode {
    canonicalise(map, Some(colouring))
}

/// Rebuild the representative map encoded by a canonical code. Vertex ids
/// follow the code's discovery order and darts are renumbered so that edge
/// partners are `2e`/`2e+1`; the result is isomorphic to every map carrying
/// this code.
fn reconstruct(code: &CanonicalCode) -> (EmbeddedMap, Option<Colouring>) {
    let xs = &code.code;
    let mut degrees = Vec::new();
    let mut colours = Vec::new();
    let mut alpha_label = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let deg = xs[i] as usize;
        i += 1;
        if code.colour_aware {
            colours.push(if xs[i] == 0 {
                Colour::Stable
            } else {
                Colour::Unstable
            });
            i += 1;
        }
        degrees.push(deg);
        for _ in 0..deg {
            alpha_label.push(xs[i] as usize);
            i += 1;
        }
    }
    let total: usize = degrees.iter().sum();
    // Pair labels into edges in label order.
    let mut id = vec![usize::MAX; total];
    let mut next_edge = 0;
    for l in 0..total {
        if id[l] == usize::MAX {
            let a = alpha_label[l];
            id[l] = 2 * next_edge;
            id[a] = 2 * next_edge + 1;
            next_edge += 1;
        }
    }
    // Successor of each label within its vertex block gives sigma.
    let mut sigma = vec![0; total];
    let mut base = 0;
    for &deg in &degrees {
        for j in 0..deg {
            let l = base + j;
            let succ = base + (j + 1) % deg;
            sigma[id[l]] = id[succ];
        }
        base += deg;
    }
    let map = EmbeddedMap::from_sigma(sigma).expect("canonical code encodes a permutation");
    let colouring = if code.colour_aware {
        // Vertex v of the rebuilt map is the v-th code record: blocks are
        // assigned in increasing label order, so smallest-dart order agrees
        // with discovery order.
        Some(Colouring::new(colours))
    } else {
        None
    };
    (map, colouring)
}

/// Canonical code together with a canonical representative map.
pub fn canonical_form(map: &EmbeddedMap) -> (CanonicalCode, EmbeddedMap) {
    let code = canonical_code(map);
    let (rep, _) = reconstruct(&code);
    (code, rep)
}

pub fn canonical_form_coloured(
    map: &EmbeddedMap,
    colouring: &Colouring,
) -> (CanonicalCode, EmbeddedMap, Colouring) {
    let code = canonical_code_coloured(map, colouring);
    let (rep, cols) = reconstruct(&code);
    let cols = cols.expect("colour-aware code carries colours");
    (code, rep, cols)
}

pub fn are_isomorphic(a: &EmbeddedMap, b: &EmbeddedMap) -> bool {
    canonical_code(a) == canonical_code(b)
}

pub fn are_isomorphic_coloured(
    a: &EmbeddedMap,
    ca: &Colouring,
    b: &EmbeddedMap,
    cb: &Colouring,
) -> bool {
    canonical_code_coloured(a, ca) == canonical_code_coloured(b, cb)
}

/// A coloured class is self-dual when swapping the two colours gives an
/// isomorphic coloured map.
pub fn is_self_dual_class(map: &EmbeddedMap, colouring: &Colouring) -> bool {
    canonical_code_coloured(map, colouring) == canonical_code_coloured(map, &colouring.swapped())
}
