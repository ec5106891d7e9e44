//! Generating words for the kernel of the four-strand parity-extended
//! symmetric quotient, with their closed forms over the 25-letter subgroup
//! alphabet.

use fpgroup::coset::{kernel_coset_table, todd_coxeter, CosetTable, EnumerationError, EnumerationLimits};
use fpgroup::word::Word;

use crate::braid::BraidGroup;
use crate::gamma2::{dsb4_alphabet, dsb4_to_ambient};
use crate::models::sym_parity_quotient;

/// A braid word together with its closed form over the subgroup alphabet,
/// expanded back into ambient generators; the two sides must agree as free
/// words.
#[derive(Debug, Clone)]
pub struct WordPair {
    pub id: String,
    pub braid: Word,
    pub expanded: Word,
}

fn pairs_from_table(bg: &BraidGroup, table: &[(&str, Word)]) -> Vec<WordPair> {
    let alphabet = dsb4_alphabet();
    let map = dsb4_to_ambient(bg);
    table
        .iter()
        .map(|(closed, braid)| WordPair {
            id: closed.to_string(),
            braid: braid.clone(),
            expanded: Word::parse(&alphabet, closed)
                .expect("closed form parses")
                .substitute(&map)
                .expect("closed form expands"),
        })
        .collect()
}

/// Sixteen words generating the kernel of the parity-extended symmetric
/// quotient of the four-strand group.
pub fn k_generator_pairs(bg: &BraidGroup) -> Vec<WordPair> {
    assert_eq!(bg.n(), 4, "kernel generators are tabulated for four strands");
    let conj = |w: &Word, by: &Word| w.conjugated_by(by).expect("same alphabet");
    let prod = |parts: &[&Word]| {
        Word::product(bg.alphabet(), parts.iter().copied()).expect("single alphabet")
    };
    let r1 = bg.rho(1);
    let table = [
        ("X2", bg.band(1, 2)),
        ("Y1 X2 Y1^-1", bg.band(1, 3)),
        ("Z1 Y2 X2 Y2^-1 Z1^-1", bg.band(1, 4)),
        ("Y1 Y2", bg.band(2, 3)),
        ("Z1 Y2 Y1 Z1^-1", bg.band(2, 4)),
        ("Z1 Z2", bg.band(3, 4)),
        ("A1 X4 A1^-1", conj(&bg.band(1, 2), &r1)),
        ("A1 Y4 X4 Y4^-1 A1^-1", conj(&bg.band(1, 3), &r1)),
        ("A1 Z4 Y3 X4 Y3^-1 Z4^-1 A1^-1", conj(&bg.band(1, 4), &r1)),
        ("A1 A4", r1.pow(2)),
        ("B1 B4", bg.rho(2).pow(2)),
        ("C1 C4", bg.rho(3).pow(2)),
        ("D1 D4", bg.rho(4).pow(2)),
        ("A1 B4", prod(&[&r1, &bg.rho(2)])),
        ("A1 C4", prod(&[&r1, &bg.rho(3)])),
        ("A1 D4", prod(&[&r1, &bg.rho(4)])),
    ];
    pairs_from_table(bg, &table)
}

/// Two further closed forms used when rewriting point-generator runs.
pub fn extra_k_pairs(bg: &BraidGroup) -> Vec<WordPair> {
    assert_eq!(bg.n(), 4, "closed forms are tabulated for four strands");
    let r3 = bg.rho(3);
    let table = [
        ("D1 C4 B1 A4", bg.rho_descending(4)),
        (
            "C1 Y4 Y3 C1^-1",
            bg.band(2, 3).conjugated_by(&r3).expect("same alphabet"),
        ),
    ];
    pairs_from_table(bg, &table)
}

/// Concrete basis of the free rank-five subgroup inside the four-strand
/// kernel: the two bands ending at the last strand, the last point
/// generator squared, and the bands conjugated through it.
pub fn f5_basis_words(bg: &BraidGroup) -> Vec<Word> {
    assert_eq!(bg.n(), 4, "basis is tabulated for four strands");
    let r4 = bg.rho(4);
    let conj = |w: &Word| w.conjugated_by(&r4).expect("same alphabet");
    vec![
        bg.band(1, 4),
        bg.band(2, 4),
        r4.pow(2),
        conj(&bg.band(1, 4)),
        conj(&bg.band(2, 4)),
    ]
}

/// Concrete basis of the free rank-three subgroup one strand further down.
pub fn f3_basis_words(bg: &BraidGroup) -> Vec<Word> {
    assert_eq!(bg.n(), 4, "basis is tabulated for four strands");
    let r3 = bg.rho(3);
    vec![
        bg.band(2, 3),
        r3.pow(2),
        bg.band(2, 3).conjugated_by(&r3).expect("same alphabet"),
    ]
}

/// Outcome of checking that the sixteen tabulated words generate the
/// kernel of the parity-extended symmetric quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub kernel_index: usize,
    pub generators_fix_base: bool,
    pub rho1_moves_base: bool,
    pub generated_index: usize,
}

fn words_fix_base(table: &CosetTable, words: &[Word]) -> bool {
    words.iter().all(|w| table.trace(0, w) == 0)
}

/// Builds the kernel coset table of the parity-extended symmetric quotient
/// of the four-strand group and checks the tabulated words against it.
pub fn gensk_membership_check(
    limits: &EnumerationLimits,
) -> Result<MembershipReport, EnumerationError> {
    let bg = BraidGroup::new(4).expect("strand count");
    let hom = sym_parity_quotient(&bg);
    let kernel = kernel_coset_table(&hom)?;
    let gens: Vec<Word> = k_generator_pairs(&bg).into_iter().map(|p| p.braid).collect();
    let extras: Vec<Word> = extra_k_pairs(&bg).into_iter().map(|p| p.braid).collect();
    let mut members = gens.clone();
    members.extend(extras);
    members.extend(f5_basis_words(&bg));
    members.extend(f3_basis_words(&bg));
    let generated = todd_coxeter(bg.presentation(), &gens, limits)?;
    Ok(MembershipReport {
        kernel_index: kernel.n_cosets(),
        generators_fix_base: words_fix_base(&kernel, &members),
        rho1_moves_base: kernel.trace(0, &bg.rho(1)) != 0,
        generated_index: generated.n_cosets(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_agree_as_free_words() {
        let bg = BraidGroup::new(4).unwrap();
        let mut pairs = k_generator_pairs(&bg);
        pairs.extend(extra_k_pairs(&bg));
        assert_eq!(pairs.len(), 18);
        for p in &pairs {
            let diff = p.braid.concat(&p.expanded.inverse()).unwrap();
            assert_eq!(diff.len(), 0, "{}: {} vs {}", p.id, p.braid, p.expanded);
        }
    }

    #[test]
    fn sixteen_words_generate_the_kernel() {
        let report = gensk_membership_check(&EnumerationLimits::default()).unwrap();
        assert_eq!(
            report,
            MembershipReport {
                kernel_index: 48,
                generators_fix_base: true,
                rho1_moves_base: true,
                generated_index: 48,
            }
        );
    }

    #[test]
    fn basis_words_lie_in_the_pure_kernel() {
        let bg = BraidGroup::new(4).unwrap();
        let hom = sym_parity_quotient(&bg);
        for w in f5_basis_words(&bg).iter().chain(f3_basis_words(&bg).iter()) {
            assert!(hom.evaluate(w).is_identity(), "{w}");
        }
    }
}
