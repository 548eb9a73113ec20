//! Classes of equilibrium-point arrangements and the census built on them.
//!
//! A quadrangulation of the sphere is bipartite, and reading one side of the
//! bipartition as stable points and the other as unstable points turns each
//! map class into at most two coloured classes (exactly one when swapping
//! the sides gives back the same coloured class). The coloured class is the
//! secondary class; forgetting everything except the pair of colour counts
//! gives the primary class. The degenerate two-point arrangement with no
//! saddle sits below the smallest quadrangulation and is carried as a
//! sentinel, not as a map.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::canon::{canonical_code_coloured, canonical_form_coloured, CanonicalCode};
use crate::error::{Error, Result};
use crate::genesis::{chunk_results, colour_child, generate_levels};
use crate::map::{
    is_3_connected, is_simple, p2, q4, radial, Colour, Colouring, EmbeddedMap,
};
use crate::surgery::{enumerate_splits, is_irreducible, is_k_contractible, split};

/// Counts of stable and unstable points. Two arrangements in the same
/// primary class have the same counts and nothing more in common.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimaryClass {
    pub s: usize,
    pub u: usize,
}

impl PrimaryClass {
    /// Number of saddle points in any arrangement of this class.
    pub fn h(&self) -> usize {
        self.s + self.u - 2
    }

    pub fn total(&self) -> usize {
        self.s + self.u
    }
}

/// The representative carried by a secondary class: either the degenerate
/// two-point arrangement or a coloured quadrangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiDual {
    /// One stable and one unstable point, no saddles; no quadrangulation
    /// represents it, so it is its own object.
    P1,
    Map(EmbeddedMap, Colouring),
}

/// A topological class of arrangements: a coloured map class together with
/// its primary class and canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondaryClass {
    pub code: CanonicalCode,
    pub primary: PrimaryClass,
    pub rep: QuasiDual,
}

impl SecondaryClass {
    pub fn from_coloured(map: &EmbeddedMap, colouring: &Colouring) -> SecondaryClass {
        let (code, rep, rep_chi) = canonical_form_coloured(map, colouring);
        SecondaryClass {
            code,
            primary: PrimaryClass {
                s: rep_chi.stable_count(),
                u: rep_chi.unstable_count(),
            },
            rep: QuasiDual::Map(rep, rep_chi),
        }
    }

    /// Swapping stable and unstable points lands back in the same class.
    pub fn is_self_dual(&self) -> bool {
        match &self.rep {
            QuasiDual::P1 => false,
            QuasiDual::Map(map, chi) => {
                self.code == canonical_code_coloured(map, &chi.swapped())
            }
        }
    }
}

/// The class of the degenerate two-point arrangement. Its stored code is
/// the coloured code of the one-edge map, which no quadrangulation can
/// collide with.
pub fn p1_class() -> SecondaryClass {
    let edge = EmbeddedMap::from_sigma(vec![0, 1]).expect("valid permutation");
    let chi = Colouring::new(vec![Colour::Stable, Colour::Unstable]);
    SecondaryClass {
        code: canonical_code_coloured(&edge, &chi),
        primary: PrimaryClass { s: 1, u: 1 },
        rep: QuasiDual::P1,
    }
}

/// All secondary classes with `n` points that are not saddles, in code
/// order. `n == 2` yields the degenerate class alone; each larger level
/// colours every map class both ways and deduplicates.
pub fn secondary_classes(n: usize, workers: usize) -> Vec<SecondaryClass> {
    assert!(n >= 2);
    if n == 2 {
        return vec![p1_class()];
    }
    let maps = crate::genesis::generate_all(n, workers);
    let coloured = chunk_results(&maps, workers, |map| {
        let (chi, chi_bar) = Colouring::bipartitions(map).expect("quadrangulations are bipartite");
        [
            SecondaryClass::from_coloured(map, &chi),
            SecondaryClass::from_coloured(map, &chi_bar),
        ]
    });
    let mut out: BTreeMap<CanonicalCode, SecondaryClass> = BTreeMap::new();
    for class in coloured.into_iter().flatten() {
        out.entry(class.code.clone()).or_insert(class);
    }
    out.into_values().collect()
}

/// The secondary classes reached from `class` by one coloured split of
/// degree between `lo` and `hi`, in code order. The degenerate class grows
/// only by the degree-one move that creates the smallest quadrangulation.
pub fn coloured_splits(class: &SecondaryClass, lo: usize, hi: usize) -> Vec<SecondaryClass> {
    let mut out: BTreeMap<CanonicalCode, SecondaryClass> = BTreeMap::new();
    match &class.rep {
        QuasiDual::P1 => {
            if lo <= 1 {
                let map = p2();
                let (chi, chi_bar) =
                    Colouring::bipartitions(&map).expect("quadrangulations are bipartite");
                for colouring in [chi, chi_bar] {
                    let child = SecondaryClass::from_coloured(&map, &colouring);
                    out.insert(child.code.clone(), child);
                }
            }
        }
        QuasiDual::Map(map, chi) => {
            for walk in enumerate_splits(map, lo, hi) {
                let grown = split(map, &walk).expect("enumerated walks are valid");
                let grown_chi = colour_child(map, chi, &walk, &grown);
                let child = SecondaryClass::from_coloured(&grown, &grown_chi);
                out.entry(child.code.clone()).or_insert(child);
            }
        }
    }
    out.into_values().collect()
}

/// The five classes that restricted splitting cannot reach from below: the
/// degenerate class, both colourings of the smallest quadrangulation, and
/// both colourings of the four-vertex map whose larger side is all pendant.
pub fn singleton_seeds() -> Vec<SecondaryClass> {
    let mut seeds = vec![p1_class()];
    for map in [p2(), q4()] {
        let (chi, chi_bar) =
            Colouring::bipartitions(&map).expect("quadrangulations are bipartite");
        let (more_stable, less_stable) = if chi.stable_count() >= chi.unstable_count() {
            (chi, chi_bar)
        } else {
            (chi_bar, chi)
        };
        seeds.push(SecondaryClass::from_coloured(&map, &more_stable));
        seeds.push(SecondaryClass::from_coloured(&map, &less_stable));
    }
    seeds
}

/// The primary classes covered by closing `seeds` under splits of exactly
/// the given degree, keeping totals within `max_total`.
pub fn primary_coverage_from(
    seeds: &[SecondaryClass],
    degree: usize,
    max_total: usize,
) -> BTreeSet<PrimaryClass> {
    let mut by_total: BTreeMap<usize, BTreeMap<CanonicalCode, SecondaryClass>> = BTreeMap::new();
    for seed in seeds {
        if seed.primary.total() <= max_total {
            by_total
                .entry(seed.primary.total())
                .or_default()
                .insert(seed.code.clone(), seed.clone());
        }
    }
    let mut covered = BTreeSet::new();
    let totals: Vec<usize> = (2..=max_total).collect();
    for total in totals {
        let Some(level) = by_total.get(&total) else {
            continue;
        };
        covered.extend(level.values().map(|c| c.primary));
        if total == max_total {
            break;
        }
        let mut children = Vec::new();
        for class in level.values() {
            children.extend(coloured_splits(class, degree, degree));
        }
        let slot = by_total.entry(total + 1).or_default();
        for child in children {
            slot.entry(child.code.clone()).or_insert(child);
        }
    }
    covered
}

/// [`primary_coverage_from`] starting at the standard singleton seeds.
pub fn primary_coverage(degree: usize, max_total: usize) -> BTreeSet<PrimaryClass> {
    primary_coverage_from(&singleton_seeds(), degree, max_total)
}

/// Per-level census line: map classes, self-dual secondary classes, and all
/// secondary classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountsRow {
    pub n: usize,
    pub q: usize,
    pub e_self_dual: usize,
    pub e_total: usize,
}

/// Partition of a level's secondary classes by which low contractions the
/// underlying map admits: both degrees, no degree two, no degree one, or
/// neither (irreducible).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityRow {
    pub n: usize,
    pub contractible_both: usize,
    pub no_degree_two: usize,
    pub no_degree_one: usize,
    pub irreducible: usize,
}

/// Full census up to a vertex count: primary-class counts (including the
/// degenerate two-point class), per-level class counts, and per-level
/// reducibility partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub max_n: usize,
    pub primary: BTreeMap<PrimaryClass, usize>,
    pub counts: Vec<CountsRow>,
    pub reducibility: Vec<ReducibilityRow>,
}

/// Count classes level by level and cross-check the class counts as they
/// are assembled: secondary classes are deduplicated from coloured codes
/// rather than inferred, and each level must satisfy the identity
/// e(n) = 2q(n) - e_sd(n) or the census aborts.
pub fn census(max_n: usize, workers: usize) -> Result<CensusReport> {
    assert!(max_n >= 3);
    let levels = generate_levels(max_n, workers);
    let mut report = CensusReport {
        max_n,
        primary: BTreeMap::from([(PrimaryClass { s: 1, u: 1 }, 1)]),
        counts: Vec::new(),
        reducibility: Vec::new(),
    };
    for level in &levels {
        let maps: Vec<&EmbeddedMap> = level.classes.values().collect();
        let per_map = chunk_results(&maps, workers, |map| {
            let (chi, chi_bar) =
                Colouring::bipartitions(map).expect("quadrangulations are bipartite");
            let code = canonical_code_coloured(map, &chi);
            let code_bar = canonical_code_coloured(map, &chi_bar);
            let contract1 = is_k_contractible(map, 1);
            let contract2 = is_k_contractible(map, 2);
            (
                [
                    (code, chi.stable_count(), chi.unstable_count()),
                    (code_bar, chi_bar.stable_count(), chi_bar.unstable_count()),
                ],
                contract1,
                contract2,
            )
        });

        let q = maps.len();
        let mut coloured: BTreeMap<CanonicalCode, PrimaryClass> = BTreeMap::new();
        let mut e_self_dual = 0;
        let mut row = ReducibilityRow {
            n: level.n,
            contractible_both: 0,
            no_degree_two: 0,
            no_degree_one: 0,
            irreducible: 0,
        };
        for (codes, contract1, contract2) in per_map {
            let self_dual = codes[0].0 == codes[1].0;
            if self_dual {
                e_self_dual += 1;
            }
            for (code, s, u) in codes {
                coloured.entry(code).or_insert(PrimaryClass { s, u });
            }
            let weight = if self_dual { 1 } else { 2 };
            match (contract1, contract2) {
                (true, true) => row.contractible_both += weight,
                (true, false) => row.no_degree_two += weight,
                (false, true) => row.no_degree_one += weight,
                (false, false) => row.irreducible += weight,
            }
        }
        let e_total = coloured.len();
        if e_total != 2 * q - e_self_dual {
            return Err(Error::CensusIdentity {
                n: level.n,
                msg: format!(
                    "{e_total} secondary classes, but {q} map classes with {e_self_dual} self-dual \
                     call for {}",
                    2 * q - e_self_dual
                ),
            });
        }
        for primary in coloured.into_values() {
            *report.primary.entry(primary).or_insert(0) += 1;
        }
        report.counts.push(CountsRow {
            n: level.n,
            q,
            e_self_dual,
            e_total,
        });
        if level.n >= 4 {
            report.reducibility.push(row);
        }
    }
    Ok(report)
}

impl CensusReport {
    /// CSV of primary-class counts, one row per (s, u) pair.
    pub fn primary_csv(&self) -> String {
        let mut out = String::from("n,s,u,count\n");
        for (class, count) in &self.primary {
            let _ = writeln!(out, "{},{},{},{}", class.total(), class.s, class.u, count);
        }
        out
    }

    /// CSV of per-level class counts.
    pub fn counts_csv(&self) -> String {
        let mut out = String::from("n,q,e_sd,sum_e\n");
        for row in &self.counts {
            let _ = writeln!(out, "{},{},{},{}", row.n, row.q, row.e_self_dual, row.e_total);
        }
        out
    }

    /// CSV of per-level reducibility partitions.
    pub fn reducibility_csv(&self) -> String {
        let mut out = String::from("n,c11,c2irr,c1irr,irr\n");
        for row in &self.reducibility {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                row.n, row.contractible_both, row.no_degree_two, row.no_degree_one, row.irreducible
            );
        }
        out
    }

    /// All three tables in one human-readable block.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "classes by vertex count (n: maps, self-dual, coloured)");
        for row in &self.counts {
            let _ = writeln!(
                out,
                "  n={:<2} q={:<6} e_sd={:<4} e={}",
                row.n, row.q, row.e_self_dual, row.e_total
            );
        }
        let _ = writeln!(out, "coloured classes by stable/unstable counts (s,u: count)");
        let mut current = 0;
        for (class, count) in &self.primary {
            if class.total() != current {
                current = class.total();
                let _ = write!(out, "\n  n={current:<2}");
            }
            let _ = write!(out, " ({},{})={}", class.s, class.u, count);
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "\nreducibility of coloured classes");
        for row in &self.reducibility {
            let _ = writeln!(
                out,
                "  n={:<2} both={:<6} no-2={:<4} no-1={:<5} neither={}",
                row.n, row.contractible_both, row.no_degree_two, row.no_degree_one, row.irreducible
            );
        }
        out
    }
}

/// The coloured quadrangulation whose arrangement is minimal for a given
/// polyhedral skeleton: vertices of the skeleton become unstable points,
/// faces become stable points, edges become saddles. Requires a simple,
/// 3-connected input; the result is always irreducible.
pub fn minimal_polyhedron_quasidual(skeleton: &EmbeddedMap) -> Result<(EmbeddedMap, Colouring)> {
    if !is_simple(skeleton) || !is_3_connected(skeleton) {
        return Err(Error::NotPolyhedral);
    }
    let (map, colouring) = radial(skeleton)?;
    assert!(
        is_irreducible(&map),
        "radial maps of polyhedra admit no low contraction"
    );
    Ok((map, colouring))
}
