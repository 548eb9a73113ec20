//! Exhaustive generation of quadrangulation classes, and reduction back to
//! irreducible ancestors.
//!
//! Generation is a breadth-first sweep over vertex counts: every class on
//! n+1 vertices arises from some class on n vertices by a split of degree at
//! most three, so splitting each stored representative with that bound and
//! deduplicating by canonical code enumerates the next level exactly once.
//! Reduction walks the other way, contracting faces of degree at most two
//! until none remain; the class reached is independent of the choices made
//! along the way, which [`ancestor_with`] lets tests confirm.

use std::collections::BTreeMap;
use std::thread;

use crate::canon::{canonical_form, canonical_form_coloured, CanonicalCode};
use crate::map::{p2, Colour, Colouring, EmbeddedMap};
use crate::surgery::{
    contract, contraction_degree, contraction_sites, enumerate_splits, split, ContractionSite,
    SplitWalk,
};

/// How a class was first reached: the code of its parent one level down and
/// the split applied to the parent's stored representative. Replaying the
/// walk on that representative reproduces the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub parent: CanonicalCode,
    pub walk: SplitWalk,
}

/// Every class on a fixed vertex count, keyed by canonical code, with the
/// canonical representative stored for each. `witnesses` has an entry for
/// each class except the three-vertex root.
#[derive(Debug, Clone)]
pub struct GenerationLevel {
    pub n: usize,
    pub classes: BTreeMap<CanonicalCode, EmbeddedMap>,
    pub witnesses: BTreeMap<CanonicalCode, Witness>,
}

/// All classes with 3..=n vertices, one level per vertex count.
///
/// The result is deterministic and independent of `workers`: parents are
/// processed in code order, worker chunks are contiguous slices of that
/// order, and chunk results are merged first-come in the same order, so the
/// surviving witness for each class is always the one a single worker would
/// have found first.
pub fn generate_levels(n: usize, workers: usize) -> Vec<GenerationLevel> {
    assert!(n >= 3, "the smallest quadrangulation has three vertices");
    assert!(workers >= 1);
    let root = p2();
    let (code, rep) = canonical_form(&root);
    let mut levels = vec![GenerationLevel {
        n: 3,
        classes: BTreeMap::from([(code, rep)]),
        witnesses: BTreeMap::new(),
    }];
    while levels.last().unwrap().n < n {
        let prev = levels.last().unwrap();
        let next = expand_level(prev, workers);
        levels.push(next);
    }
    levels
}

/// The classes on exactly `n` vertices, in code order.
pub fn generate_all(n: usize, workers: usize) -> Vec<EmbeddedMap> {
    generate_levels(n, workers)
        .pop()
        .unwrap()
        .classes
        .into_values()
        .collect()
}

/// The irreducible classes on exactly `n` vertices, in code order.
pub fn irreducibles(n: usize, workers: usize) -> Vec<EmbeddedMap> {
    generate_all(n, workers)
        .into_iter()
        .filter(crate::surgery::is_irreducible)
        .collect()
}

fn expand_level(prev: &GenerationLevel, workers: usize) -> GenerationLevel {
    let parents: Vec<(&CanonicalCode, &EmbeddedMap)> = prev.classes.iter().collect();
    let chunked = chunk_results(&parents, workers, |(code, map)| {
        let mut found: BTreeMap<CanonicalCode, (EmbeddedMap, Witness)> = BTreeMap::new();
        for walk in enumerate_splits(map, 1, 3) {
            let child = split(map, &walk).expect("enumerated walks are valid");
            let (child_code, child_rep) = canonical_form(&child);
            found.entry(child_code).or_insert_with(|| {
                (
                    child_rep,
                    Witness {
                        parent: (*code).clone(),
                        walk,
                    },
                )
            });
        }
        found
    });

    let mut classes = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for found in chunked {
        for (child_code, (rep, witness)) in found {
            if !classes.contains_key(&child_code) {
                classes.insert(child_code.clone(), rep);
                witnesses.insert(child_code, witness);
            }
        }
    }
    GenerationLevel {
        n: prev.n + 1,
        classes,
        witnesses,
    }
}

/// Run `work` over contiguous chunks of `items` on up to `workers` threads
/// and return the per-item results flattened in the original item order.
/// Results are positionally deterministic, so downstream merges behave the
/// same for every worker count.
pub(crate) fn chunk_results<T, R, F>(items: &[T], workers: usize, work: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.min(items.len()).max(1);
    if workers == 1 {
        return items.iter().map(&work).collect();
    }
    let chunk_len = items.len().div_ceil(workers);
    let mut out: Vec<Vec<R>> = Vec::new();
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_len)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&work).collect::<Vec<R>>()))
            .collect();
        for handle in handles {
            out.push(handle.join().expect("generation worker panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// Classes reachable from `seeds` by repeated splits of degree between `lo`
/// and `hi`, grouped by vertex count, up to `max_n` vertices. Seeds may sit
/// on different levels; each level combines the seeds of that size with the
/// children of the previous level.
pub fn closure(
    seeds: &[EmbeddedMap],
    lo: usize,
    hi: usize,
    max_n: usize,
) -> BTreeMap<usize, BTreeMap<CanonicalCode, EmbeddedMap>> {
    let mut by_n: BTreeMap<usize, BTreeMap<CanonicalCode, EmbeddedMap>> = BTreeMap::new();
    for seed in seeds {
        let (code, rep) = canonical_form(seed);
        if seed.vertex_count() <= max_n {
            by_n.entry(seed.vertex_count()).or_default().insert(code, rep);
        }
    }
    let Some(&start) = by_n.keys().next() else {
        return by_n;
    };
    for n in start..max_n {
        let Some(level) = by_n.get(&n) else { continue };
        let mut next: Vec<(CanonicalCode, EmbeddedMap)> = Vec::new();
        for map in level.values() {
            for walk in enumerate_splits(map, lo, hi) {
                let child = split(map, &walk).expect("enumerated walks are valid");
                let (code, rep) = canonical_form(&child);
                next.push((code, rep));
            }
        }
        let slot = by_n.entry(n + 1).or_default();
        for (code, rep) in next {
            slot.entry(code).or_insert(rep);
        }
    }
    by_n
}

/// Coloured variant of [`closure`]: classes are coloured maps, colours are
/// carried through each split, and deduplication uses colour-aware codes.
pub fn closure_coloured(
    seeds: &[(EmbeddedMap, Colouring)],
    lo: usize,
    hi: usize,
    max_n: usize,
) -> BTreeMap<usize, BTreeMap<CanonicalCode, (EmbeddedMap, Colouring)>> {
    let mut by_n: BTreeMap<usize, BTreeMap<CanonicalCode, (EmbeddedMap, Colouring)>> =
        BTreeMap::new();
    for (seed, chi) in seeds {
        if seed.vertex_count() <= max_n {
            let (code, rep, rep_chi) = canonical_form_coloured(seed, chi);
            by_n.entry(seed.vertex_count())
                .or_default()
                .insert(code, (rep, rep_chi));
        }
    }
    let Some(&start) = by_n.keys().next() else {
        return by_n;
    };
    for n in start..max_n {
        let Some(level) = by_n.get(&n) else { continue };
        let mut next = Vec::new();
        for (map, chi) in level.values() {
            for walk in enumerate_splits(map, lo, hi) {
                let child = split(map, &walk).expect("enumerated walks are valid");
                let child_chi = colour_child(map, chi, &walk, &child);
                next.push(canonical_form_coloured(&child, &child_chi));
            }
        }
        let slot = by_n.entry(n + 1).or_default();
        for (code, rep, rep_chi) in next {
            slot.entry(code).or_insert((rep, rep_chi));
        }
    }
    by_n
}

/// Extend a parent's colouring across a split. Splitting preserves the
/// bipartition, so every child vertex that keeps one of the parent's darts
/// keeps that dart's colour, and the one possibly all-new vertex (the split
/// companion, when the fan leaves it no original darts) sits on the same
/// side as the vertex that was split.
pub fn colour_child(
    parent: &EmbeddedMap,
    chi: &Colouring,
    walk: &SplitWalk,
    child: &EmbeddedMap,
) -> Colouring {
    let cutoff = parent.dart_count();
    let mut colours = vec![Colour::Stable; child.vertex_count()];
    for v in child.vertices() {
        let old = child.rotation(v).find(|&d| d < cutoff);
        colours[v] = match old {
            Some(d) => chi.colour(parent.vertex_of(d)),
            None => chi.colour(walk.vertex),
        };
    }
    Colouring::new(colours)
}

/// Contract faces of degree at most two until the map is irreducible,
/// always taking the first available site. Returns the irreducible class
/// representative reached together with the sites applied, in order (each
/// site is relative to the map of its step).
pub fn ancestor(map: &EmbeddedMap) -> (EmbeddedMap, Vec<ContractionSite>) {
    ancestor_with(map, |_| 0)
}

/// Like [`ancestor`], but `pick` chooses which of the currently available
/// low-degree contractions to apply (it receives the count and must return
/// an index below it). Exposing the choice lets tests verify that every
/// reduction order reaches the same class.
pub fn ancestor_with(
    map: &EmbeddedMap,
    mut pick: impl FnMut(usize) -> usize,
) -> (EmbeddedMap, Vec<ContractionSite>) {
    let mut current = map.clone();
    let mut path = Vec::new();
    loop {
        let options: Vec<ContractionSite> = contraction_sites(&current)
            .into_iter()
            .filter(|site| {
                matches!(contraction_degree(&current, site), Ok(1) | Ok(2))
                    && contract(&current, site).is_ok()
            })
            .collect();
        if options.is_empty() {
            return (current, path);
        }
        let choice = pick(options.len());
        let site = options[choice];
        current = contract(&current, &site).expect("site was checked");
        path.push(site);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::map::{c4, pseudo_double_wheel, q3, q4};
    use crate::oracle::isomorphic_by_propagation;

    #[test]
    fn levels_start_with_the_known_small_counts() {
        let levels = generate_levels(6, 1);
        let counts: Vec<usize> = levels.iter().map(|l| l.classes.len()).collect();
        assert_eq!(counts, vec![1, 3, 7, 30]);
    }

    #[test]
    fn four_vertex_level_matches_the_handmade_maps() {
        let level4 = generate_levels(4, 1).pop().unwrap();
        for target in [c4(), q3(), q4()] {
            assert!(
                level4
                    .classes
                    .values()
                    .any(|m| isomorphic_by_propagation(m, &target)),
                "missing a four-vertex class"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_the_outcome() {
        let single = generate_levels(7, 1);
        for workers in [2, 3, 8] {
            let multi = generate_levels(7, workers);
            for (a, b) in single.iter().zip(&multi) {
                assert_eq!(a.classes, b.classes, "classes differ at n={}", a.n);
                let aw: Vec<_> = a.witnesses.iter().collect();
                let bw: Vec<_> = b.witnesses.iter().collect();
                assert_eq!(aw, bw, "witnesses differ at n={}", a.n);
            }
        }
    }

    #[test]
    fn every_witness_replays_to_its_class() {
        let levels = generate_levels(6, 1);
        for window in levels.windows(2) {
            let (parents, children) = (&window[0], &window[1]);
            for (code, witness) in &children.witnesses {
                let parent = &parents.classes[&witness.parent];
                let rebuilt = split(parent, &witness.walk).unwrap();
                assert_eq!(&canonical_code(&rebuilt), code);
            }
        }
    }

    #[test]
    fn reduction_reaches_the_root_from_every_small_map() {
        for map in generate_all(6, 1) {
            let (anc, path) = ancestor(&map);
            assert!(crate::surgery::is_irreducible(&anc));
            // Every class on up to seven vertices reduces all the way down
            // to the three-vertex map.
            assert!(isomorphic_by_propagation(&anc, &p2()));
            assert_eq!(path.len(), map.vertex_count() - anc.vertex_count());
        }
    }

    #[test]
    fn reduction_order_does_not_change_the_ancestor() {
        let map = generate_all(7, 1).pop().unwrap();
        let (first, _) = ancestor(&map);
        let reference = canonical_code(&first);
        // A handful of deterministic but scrambled pick sequences.
        for salt in 0..5usize {
            let mut state = salt.wrapping_mul(0x9e3779b97f4a7c15);
            let (anc, _) = ancestor_with(&map, |count| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % count
            });
            assert_eq!(canonical_code(&anc), reference);
        }
    }

    #[test]
    fn closure_under_all_splits_matches_plain_generation() {
        let by_n = closure(&[p2()], 1, 3, 6);
        let levels = generate_levels(6, 1);
        for level in &levels {
            let codes: Vec<_> = by_n[&level.n].keys().cloned().collect();
            let expect: Vec<_> = level.classes.keys().cloned().collect();
            assert_eq!(codes, expect, "closure differs at n={}", level.n);
        }
    }

    #[test]
    fn pseudo_double_wheels_are_irreducible() {
        for k in 3..=4 {
            assert!(crate::surgery::is_irreducible(&pseudo_double_wheel(k).unwrap()));
        }
    }

    #[test]
    fn coloured_closure_respects_bipartitions() {
        let (chi, chi_bar) = Colouring::bipartitions(&p2()).unwrap();
        let by_n = closure_coloured(&[(p2(), chi), (p2(), chi_bar)], 1, 3, 5);
        for (n, level) in &by_n {
            for (map, chi) in level.values() {
                assert!(chi.is_proper(map), "improper colouring at n={n}");
            }
        }
        // Colour-aware classes at n=4: (s,u) splits as 1+2+1 = 4 classes.
        assert_eq!(by_n[&4].len(), 4);
    }
}
