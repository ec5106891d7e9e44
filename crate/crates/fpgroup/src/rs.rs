//! Subgroup presentations from a coset table and a Schreier transversal,
//! plus relator-multiset comparison of presentations.

use std::collections::HashMap;

use crate::coset::{CosetTable, EnumerationError, SchreierGenerators};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

/// Presentation of a finite-index subgroup over Schreier generators, with
/// the expansion of every generator back into the ambient group.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    pub schreier: SchreierGenerators,
    pub transversal: Vec<Word>,
    pub raw_relator_count: usize,
}

impl SubgroupPresentation {
    /// Ambient word for each subgroup generator.
    pub fn dictionary(&self) -> &[Word] {
        self.schreier.expansions()
    }
}

/// Rewrites every ambient relator at every coset into Schreier generators.
/// `transversal` must be indexed by coset.
pub fn subgroup_presentation(
    ambient: &Presentation,
    t: &CosetTable,
    transversal: &[Word],
) -> Result<SubgroupPresentation, EnumerationError> {
    let schreier = SchreierGenerators::new(ambient, t, transversal)?;
    let mut relators = Vec::with_capacity(ambient.relators().len() * t.n_cosets());
    for r in ambient.relators() {
        for c in 0..t.n_cosets() as u32 {
            let (w, end) = schreier.rewrite_from(t, c, r);
            assert_eq!(end, c, "relators fix every coset of a completed table");
            relators.push(w);
        }
    }
    let raw_relator_count = relators.len();
    let presentation = Presentation::new(schreier.alphabet(), relators)
        .expect("rewritten relators share the Schreier alphabet");
    Ok(SubgroupPresentation {
        presentation,
        schreier,
        transversal: transversal.to_vec(),
        raw_relator_count,
    })
}

/// Outcome of comparing two presentations relator-by-relator.
#[derive(Debug, Clone)]
pub struct MatchReport {
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
}

impl MatchReport {
    pub fn pass(&self) -> bool {
        self.unmatched_left.is_empty() && self.unmatched_right.is_empty()
    }
}

/// Compares relator multisets up to free and cyclic reduction, rotation,
/// and inversion, after renaming left generators via `naming` (left
/// generator i becomes right generator naming[i]; must be a bijection).
pub fn match_presentations(
    left: &Presentation,
    right: &Presentation,
    naming: &[usize],
) -> MatchReport {
    assert_eq!(naming.len(), left.gen_count());
    assert_eq!(left.gen_count(), right.gen_count());
    let mut seen = vec![false; right.gen_count()];
    for &t in naming {
        assert!(!seen[t], "naming must be a bijection");
        seen[t] = true;
    }

    let mut pool: HashMap<Vec<Letter>, Vec<usize>> = HashMap::new();
    for (i, r) in right.relators().iter().enumerate() {
        pool.entry(r.cyclic_canonical()).or_default().push(i);
    }
    let mut unmatched_left = Vec::new();
    for (i, r) in left.relators().iter().enumerate() {
        let translated = Word::from_letters(
            right.alphabet(),
            r.letters().iter().map(|l| Letter::new(naming[l.gen], l.inv)),
        );
        match pool.get_mut(&translated.cyclic_canonical()).and_then(Vec::pop) {
            Some(_) => {}
            None => unmatched_left.push(i),
        }
    }
    let mut unmatched_right: Vec<usize> = pool.into_values().flatten().collect();
    unmatched_right.sort_unstable();
    MatchReport { unmatched_left, unmatched_right }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::abelian_invariants;
    use crate::coset::{todd_coxeter, EnumerationLimits};

    fn words(p: &Presentation, texts: &[&str]) -> Vec<Word> {
        texts.iter().map(|t| Word::parse(p.alphabet(), t).unwrap()).collect()
    }

    #[test]
    fn index_two_kernel_of_free_group() {
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let sub = words(&p, &["a^2", "b", "a b a^-1"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        let trans = t.schreier_transversal();
        let sp = subgroup_presentation(&p, &t, &trans).unwrap();
        assert_eq!(sp.presentation.gen_count(), 3);
        assert!(sp.presentation.relators().is_empty());
        assert_eq!(sp.raw_relator_count, 0);
        let dict: Vec<String> = sp.dictionary().iter().map(Word::to_string).collect();
        assert_eq!(dict, vec!["a^2", "b", "a b a^-1"]);
    }

    #[test]
    fn nielsen_schreier_rank_small_case() {
        // Index 3 in a free group of rank 2: rank 3*(2-1)+1 = 4.
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let sub = words(&p, &["a^3", "b", "a b a^-1", "a^2 b a^-2"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 3);
        let sp = subgroup_presentation(&p, &t, &t.schreier_transversal()).unwrap();
        assert_eq!(sp.presentation.gen_count(), 4);
        assert!(sp.presentation.relators().is_empty());
    }

    #[test]
    fn cyclic_subgroup_of_symmetric_group() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let sub = words(&p, &["a"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        let sp = subgroup_presentation(&p, &t, &t.schreier_transversal()).unwrap();
        assert_eq!(sp.raw_relator_count, 9);
        let inv = abelian_invariants(&sp.presentation);
        assert_eq!(inv.to_string(), "(0, [2])");
    }

    #[test]
    fn invariants_do_not_depend_on_transversal() {
        // Z3 x Z3 over the first factor: quotient-side subgroup is Z3.
        let p = Presentation::parse_parts(
            &["a", "b"],
            &["a^3", "b^3", "a b a^-1 b^-1"],
        )
        .unwrap();
        let sub = words(&p, &["a"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 3);
        let bfs = t.schreier_transversal();
        let other = t.index_transversal(&words(&p, &["1", "b^-1", "b^-2"])).unwrap();
        assert_ne!(bfs, other);
        let sp1 = subgroup_presentation(&p, &t, &bfs).unwrap();
        let sp2 = subgroup_presentation(&p, &t, &other).unwrap();
        let i1 = abelian_invariants(&sp1.presentation);
        let i2 = abelian_invariants(&sp2.presentation);
        assert_eq!(i1, i2);
        assert_eq!(i1.to_string(), "(0, [3])");
    }

    #[test]
    fn dictionary_words_fix_coset_zero() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let t = todd_coxeter(&p, &words(&p, &["a b"]), &EnumerationLimits::default()).unwrap();
        let sp = subgroup_presentation(&p, &t, &t.schreier_transversal()).unwrap();
        for w in sp.dictionary() {
            assert_eq!(t.trace(0, w), 0);
        }
    }

    #[test]
    fn relator_matching_up_to_rotation_and_inversion() {
        let a = Presentation::parse_parts(&["x", "y"], &["x y x^-1 y^-1", "x^4"]).unwrap();
        let b = Presentation::parse_parts(&["u", "v"], &["v^-4", "v u v^-1 u^-1"]).unwrap();
        // x -> v, y -> u.
        let report = match_presentations(&a, &b, &[1, 0]);
        assert!(report.pass());

        let c = Presentation::parse_parts(&["u", "v"], &["v^-4", "v u v u"]).unwrap();
        let report = match_presentations(&a, &c, &[1, 0]);
        assert_eq!(report.unmatched_left, vec![0]);
        assert_eq!(report.unmatched_right, vec![1]);
    }

    #[test]
    fn matching_respects_multiplicity() {
        let a = Presentation::parse_parts(&["x"], &["x^2", "x^2"]).unwrap();
        let b = Presentation::parse_parts(&["x"], &["x^2"]).unwrap();
        // Presentation::new keeps duplicates, so multiset counts differ.
        assert_eq!(a.relators().len(), 2);
        let report = match_presentations(&a, &b, &[0]);
        assert!(!report.pass());
        assert_eq!(report.unmatched_left.len(), 1);
    }
}
