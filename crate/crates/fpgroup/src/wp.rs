//! Identity checking in a presented group: free reduction, relator-conjugate
//! recognition, completed rewriting systems, and certification against a
//! registered family of finite quotients.

use std::collections::HashSet;

use crate::kb::{knuth_bendix, KbCaps, KbStatus, RewritingSystem};
use crate::presentation::{PermHom, Presentation};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrivialityVerdict {
    /// Established exactly: `how` names the deciding mechanism.
    ProvedTrivial { how: String },
    /// Established nontrivial, with the quotient that separates it.
    Refuted { quotient: String },
    /// Trivial in every registered finite quotient; not decided.
    Consistent { quotients: Vec<String> },
}

impl TrivialityVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, TrivialityVerdict::Refuted { .. })
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, TrivialityVerdict::ProvedTrivial { .. })
    }

    /// Proved or consistent: acceptable for identity claims that only
    /// require agreement across the registered quotients.
    pub fn holds_in_all_quotients(&self) -> bool {
        !self.is_refuted()
    }
}

/// Word-problem context for one presented group.
#[derive(Debug)]
pub struct WordProblem {
    presentation: Presentation,
    rewriting: RewritingSystem,
    relator_forms: HashSet<Vec<crate::word::Letter>>,
    quotients: Vec<(String, PermHom)>,
}

impl WordProblem {
    pub fn new(presentation: Presentation, caps: &KbCaps) -> Self {
        let rewriting = knuth_bendix(&presentation, caps);
        let relator_forms =
            presentation.relators().iter().map(Word::cyclic_canonical).collect();
        WordProblem { presentation, rewriting, relator_forms, quotients: Vec::new() }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn completed(&self) -> bool {
        self.rewriting.status() == KbStatus::Completed
    }

    /// Registers a finite quotient. The generator images must satisfy every
    /// relator; a non-homomorphism would make verdicts meaningless.
    pub fn register_quotient(&mut self, name: impl Into<String>, hom: PermHom) {
        assert!(hom.is_homomorphism(), "registered quotient must be a homomorphism");
        self.quotients.push((name.into(), hom));
    }

    pub fn quotient_names(&self) -> Vec<&str> {
        self.quotients.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn check_identity(&self, lhs: &Word, rhs: &Word) -> TrivialityVerdict {
        let w = lhs.concat(&rhs.inverse()).expect("identity sides share one alphabet");
        self.check_trivial(&w)
    }

    pub fn check_trivial(&self, w: &Word) -> TrivialityVerdict {
        if w.is_empty() {
            return TrivialityVerdict::ProvedTrivial { how: "free reduction".into() };
        }
        // A cyclic rotation of a relator (or its inverse) is a conjugate of
        // the relator, hence trivial.
        let (core, _) = w.cyclically_reduce();
        if core.is_empty() || self.relator_forms.contains(&w.cyclic_canonical()) {
            return TrivialityVerdict::ProvedTrivial { how: "relator conjugate".into() };
        }
        if let Some(trivial) = self.rewriting.is_trivial(w) {
            if trivial {
                return TrivialityVerdict::ProvedTrivial { how: "rewriting normal form".into() };
            }
            return TrivialityVerdict::Refuted { quotient: "rewriting normal form".into() };
        }
        for (name, hom) in &self.quotients {
            if !hom.evaluate(w).is_identity() {
                return TrivialityVerdict::Refuted { quotient: name.clone() };
            }
        }
        TrivialityVerdict::Consistent {
            quotients: self.quotients.iter().map(|(n, _)| n.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn s3_quotient(p: &Presentation) -> PermHom {
        PermHom::new(
            p.clone(),
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]),
                Permutation::from_cycles(3, &[&[1, 2]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn relators_prove_trivial() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let wp = WordProblem::new(p.clone(), &KbCaps::default());
        for r in p.relators() {
            assert!(wp.check_trivial(r).is_proved());
        }
        // A conjugated rotation of a relator.
        let w = Word::parse(p.alphabet(), "b a b a b a").unwrap();
        let t = Word::parse(p.alphabet(), "a b").unwrap();
        assert!(wp.check_trivial(&w.conjugated_by(&t).unwrap()).is_proved());
    }

    #[test]
    fn quotient_refutes_nontrivial_generator() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        // Cap the rewriting so only quotients can answer.
        let mut wp = WordProblem::new(p.clone(), &KbCaps { max_rules: 4, max_lhs_len: 64 });
        assert!(!wp.completed());
        wp.register_quotient("s3", s3_quotient(&p));
        let a = Word::parse(p.alphabet(), "a").unwrap();
        assert_eq!(wp.check_trivial(&a), TrivialityVerdict::Refuted { quotient: "s3".into() });
    }

    #[test]
    fn consistent_when_no_decider() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let mut wp = WordProblem::new(p.clone(), &KbCaps { max_rules: 4, max_lhs_len: 64 });
        wp.register_quotient("s3", s3_quotient(&p));
        // (ab)^3 conjugated and multiplied by a relator: trivial in the
        // group, but not syntactically a relator rotation.
        let w = Word::parse(p.alphabet(), "b a b a b a b^2").unwrap();
        let v = wp.check_trivial(&w);
        assert_eq!(v, TrivialityVerdict::Consistent { quotients: vec!["s3".into()] });
        assert!(v.holds_in_all_quotients());
    }

    #[test]
    fn completed_system_decides_exactly() {
        let p = Presentation::parse_parts(&["x", "y"], &["x^2 y^-2", "y x y^-1 x"]).unwrap();
        let mut wp = WordProblem::new(p.clone(), &KbCaps::default());
        assert!(wp.completed());
        // Regular representation on 8 points via enumeration.
        let t = crate::coset::todd_coxeter(&p, &[], &crate::coset::EnumerationLimits::default())
            .unwrap();
        wp.register_quotient(
            "regular",
            PermHom::new(p.clone(), vec![t.permutation(0), t.permutation(1)]).unwrap(),
        );
        // x^4 is central and trivial in Q8? No: x^4 = 1 holds (x has order
        // 4); x^2 is the unique involution, nontrivial.
        let x4 = Word::parse(p.alphabet(), "x^4").unwrap();
        assert!(wp.check_trivial(&x4).is_proved());
        let x2 = Word::parse(p.alphabet(), "x^2").unwrap();
        assert!(wp.check_trivial(&x2).is_refuted());
    }

    #[test]
    fn soundness_on_sampled_words() {
        // Faithful quotient: exact triviality is visible in the regular
        // representation, so the two mechanisms must agree everywhere.
        let p = Presentation::parse_parts(&["x", "y"], &["x^2 y^-2", "y x y^-1 x"]).unwrap();
        let t = crate::coset::todd_coxeter(&p, &[], &crate::coset::EnumerationLimits::default())
            .unwrap();
        let hom = PermHom::new(p.clone(), vec![t.permutation(0), t.permutation(1)]).unwrap();
        let wp = WordProblem::new(p.clone(), &KbCaps::default());
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..500 {
            let len = (next() % 12) as usize;
            let letters: Vec<crate::word::Letter> = (0..len)
                .map(|_| crate::word::Letter::new((next() % 2) as usize, next() % 2 == 1))
                .collect();
            let w = Word::from_letters(p.alphabet(), letters);
            let verdict = wp.check_trivial(&w);
            let truly_trivial = hom.evaluate(&w).is_identity();
            match verdict {
                TrivialityVerdict::ProvedTrivial { .. } => assert!(truly_trivial),
                TrivialityVerdict::Refuted { .. } => assert!(!truly_trivial),
                TrivialityVerdict::Consistent { .. } => {
                    panic!("completed system must decide every word")
                }
            }
        }
    }
}
