//! The mod-two kernel of a rank-five free group, presented on the basis
//! cut out by a 31-letter prefix transversal, and the expansion of one
//! twisted element over that basis.

use fpgroup::coset::{kernel_coset_table, EnumerationError};
use fpgroup::perm::Permutation;
use fpgroup::presentation::PermHom;
use fpgroup::rs::subgroup_presentation;
use fpgroup::word::{Alphabet, Word};
use fpgroup::Presentation;

use crate::actions::{act_phi3, apply_action, e5_alphabet};

/// Letter names of the 31-letter word: three-letter blocks separated by
/// singles.
const TAU_SINGLES: [&str; 7] = ["e3", "e4", "e3", "e5", "e3", "e4", "e3"];

/// The 31-letter positive word whose prefixes form the transversal.
pub fn tau_word() -> Word {
    let a = e5_alphabet();
    let mut text = String::from("e1 e2 e1");
    for s in TAU_SINGLES {
        text.push_str(&format!(" {s} e1 e2 e1"));
    }
    Word::parse(&a, &text).expect("parses")
}

/// The first `i` letters of the 31-letter word, 0 <= i <= 31.
pub fn tau_prefix(i: usize) -> Word {
    let tau = tau_word();
    let a = e5_alphabet();
    Word::from_letters(&a, tau.letters()[..i].iter().copied())
}

/// Everything the basis computation produces, vectors indexed by the
/// surviving basis elements.
#[derive(Debug, Clone)]
pub struct KernelBasisReport {
    pub n_cosets: usize,
    pub basis_size: usize,
    pub rank_three_basis_size: usize,
    pub rank_three_contains_square: bool,
    /// Exponent vector of the input word over the basis.
    pub input_vector: Vec<i64>,
    /// Exponent vector of the twisted input word over the basis.
    pub image_vector: Vec<i64>,
    /// The eleven-term target for the twisted word.
    pub expected_vector: Vec<i64>,
    /// The one-term target for the input word itself.
    pub expected_input_vector: Vec<i64>,
}

/// (prefix length, letter, sign) triples of the expected expansion.
const EXPECTED_TERMS: [(usize, &str, i64); 11] = [
    (3, "e1", 1),
    (2, "e2", 1),
    (1, "e1", 1),
    (0, "e2", 1),
    (5, "e1", 1),
    (4, "e2", 1),
    (7, "e1", 1),
    (6, "e2", 1),
    (5, "e3", 1),
    (3, "e2", -1),
    (7, "e2", -1),
];

/// Free generators of the mod-two kernel of a free group: one surviving
/// rewriting generator per non-tree edge.
fn free_kernel_basis(
    names: &[&str],
    degree_bits: usize,
    transversal: Option<Vec<Word>>,
) -> Result<(fpgroup::coset::CosetTable, fpgroup::rs::SubgroupPresentation), EnumerationError> {
    let alphabet = Alphabet::new(names.iter().copied()).expect("distinct names");
    let p = Presentation::new(&alphabet, Vec::new()).expect("free presentation");
    let degree = 1usize << degree_bits;
    let images = (0..names.len())
        .map(|i| {
            Permutation::from_images((0..degree as u32).map(|pt| pt ^ (1 << i)).collect())
                .expect("bijection")
        })
        .collect();
    let h = PermHom::new(p.clone(), images).expect("images per generator");
    let t = kernel_coset_table(&h)?;
    let transversal = match transversal {
        Some(words) => t.index_transversal(&words)?,
        None => t.schreier_transversal(),
    };
    let sub = subgroup_presentation(&p, &t, &transversal)?;
    Ok((t, sub))
}

/// Runs the whole computation: validates the prefix transversal, counts the
/// basis, expands the input word and its image under the squared twist, and
/// assembles the expected expansions.
pub fn mod_two_kernel_check() -> Result<KernelBasisReport, EnumerationError> {
    let e5 = e5_alphabet();
    let prefixes: Vec<Word> = (0..32).map(tau_prefix).collect();
    let (t, sub) = free_kernel_basis(
        &["e1", "e2", "e3", "e4", "e5"],
        5,
        Some(prefixes.clone()),
    )?;
    let basis_size = sub.presentation.gen_count();

    let coset_of = |w: &Word| -> usize {
        sub.transversal
            .iter()
            .position(|r| r == w)
            .expect("every prefix is a coset representative")
    };

    let assemble = |terms: &[(usize, &str, i64)]| -> Vec<i64> {
        let mut v = vec![0i64; basis_size];
        for &(prefix, letter, sign) in terms {
            let c = coset_of(&prefixes[prefix]);
            let gen = e5.id(letter).expect("letter name");
            let id = sub
                .schreier
                .generator_id(c as u32, gen)
                .expect("expected term is not a tree edge");
            v[id] += sign;
        }
        v
    };

    let input = {
        let tail = tau_prefix(2).inverse();
        tau_prefix(5)
            .concat(&Word::parse(&e5, "e3").expect("parses"))
            .and_then(|w| w.concat(&tail))
            .expect("same alphabet")
    };
    let twist = act_phi3().then(&act_phi3()).expect("endomorphism composes");
    let image = apply_action(&twist, &input);

    let input_vector = sub.schreier.rewrite(&t, &input)?.exponent_vector();
    let image_vector = sub.schreier.rewrite(&t, &image)?.exponent_vector();

    let (t3, sub3) = free_kernel_basis(&["g1", "g2", "g3"], 3, None)?;
    let g3 = sub3.presentation.gen_count();
    let square = Word::parse(&Alphabet::new(["g1", "g2", "g3"]).expect("distinct"), "g2^2")
        .expect("parses");
    let rank_three_contains_square = sub3.schreier.rewrite(&t3, &square).is_ok();

    Ok(KernelBasisReport {
        n_cosets: t.n_cosets(),
        basis_size,
        rank_three_basis_size: g3,
        rank_three_contains_square,
        input_vector,
        image_vector,
        expected_vector: assemble(&EXPECTED_TERMS),
        expected_input_vector: assemble(&[(5, "e3", 1)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_has_thirty_one_letters_and_distinct_prefixes() {
        let tau = tau_word();
        assert_eq!(tau.len(), 31);
        let prefixes: Vec<Word> = (0..32).map(tau_prefix).collect();
        for i in 0..32 {
            for j in 0..i {
                assert_ne!(prefixes[i], prefixes[j]);
            }
        }
        for i in 1..32 {
            assert_eq!(
                prefixes[i].letters()[..i - 1],
                prefixes[i - 1].letters()[..]
            );
        }
    }

    #[test]
    fn basis_sizes_and_vectors() {
        let r = mod_two_kernel_check().unwrap();
        assert_eq!(r.n_cosets, 32);
        assert_eq!(r.basis_size, 129);
        assert_eq!(r.rank_three_basis_size, 17);
        assert!(r.rank_three_contains_square);
        assert_eq!(r.input_vector, r.expected_input_vector);
        assert_eq!(r.image_vector, r.expected_vector);
        assert_ne!(r.image_vector, r.input_vector);
    }
}
