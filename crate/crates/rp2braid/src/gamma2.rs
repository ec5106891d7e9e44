//! The index-four normal subgroup cut out by both mod-two exponent sums,
//! presented on the 8n-7 rewriting generators, together with the rewriting
//! dictionary and the four-strand specialization on the 25-letter alphabet.

use std::sync::Arc;

use fpgroup::coset::{kernel_coset_table, CosetTable, EnumerationError};
use fpgroup::perm::Permutation;
use fpgroup::presentation::PermHom;
use fpgroup::rs::{subgroup_presentation, SubgroupPresentation};
use fpgroup::word::{Alphabet, Word};
use fpgroup::Presentation;

use crate::braid::{BraidError, BraidGroup};

/// Generator count of the rewritten presentation.
pub fn gamma2_gen_count(n: usize) -> usize {
    8 * n - 7
}

fn family_alphabet(n: usize) -> Arc<Alphabet> {
    let mut names = Vec::with_capacity(gamma2_gen_count(n));
    for i in 2..n {
        names.push(format!("a{i}"));
    }
    for i in 1..n {
        names.push(format!("b{i}"));
    }
    for i in 2..n {
        names.push(format!("g{i}"));
    }
    for i in 1..n {
        names.push(format!("t{i}"));
    }
    for j in 1..=n {
        names.push(format!("e{j}"));
    }
    for j in 2..=n {
        names.push(format!("k{j}"));
    }
    for j in 1..=n {
        names.push(format!("h{j}"));
    }
    for j in 1..=n {
        names.push(format!("l{j}"));
    }
    Alphabet::new(names).expect("family names are distinct")
}

struct Family {
    alphabet: Arc<Alphabet>,
}

impl Family {
    fn gen(&self, prefix: &str, idx: usize) -> Word {
        match self.alphabet.id(&format!("{prefix}{idx}")) {
            Some(g) => Word::gen(&self.alphabet, g),
            None => Word::identity(&self.alphabet),
        }
    }
    fn alpha(&self, i: usize) -> Word {
        self.gen("a", i)
    }
    fn beta(&self, i: usize) -> Word {
        self.gen("b", i)
    }
    fn gamma(&self, i: usize) -> Word {
        self.gen("g", i)
    }
    fn tau(&self, i: usize) -> Word {
        self.gen("t", i)
    }
    fn eta(&self, j: usize) -> Word {
        self.gen("e", j)
    }
    fn kappa(&self, j: usize) -> Word {
        self.gen("k", j)
    }
    fn theta(&self, j: usize) -> Word {
        self.gen("h", j)
    }
    fn lambda(&self, j: usize) -> Word {
        self.gen("l", j)
    }
    fn prod(&self, parts: &[Word]) -> Word {
        Word::product(&self.alphabet, parts.iter()).expect("single alphabet")
    }
}

/// The presentation on the 8n-7 rewriting generators, n >= 3. Relator
/// families mirror the ambient ones, four rewritten copies each.
pub fn gamma2_family_presentation(n: usize) -> Result<Presentation, BraidError> {
    assert!(n >= 3, "the rewritten presentation needs at least three strands");
    let f = Family { alphabet: family_alphabet(n) };
    let mut relators = Vec::new();

    // Distant band pairs.
    for i in 1..n {
        for j in i + 2..n {
            relators.push(f.prod(&[f.alpha(i), f.beta(j), f.beta(i).inverse(), f.alpha(j).inverse()]));
            relators.push(f.prod(&[f.beta(i), f.alpha(j), f.alpha(i).inverse(), f.beta(j).inverse()]));
            relators.push(f.prod(&[f.gamma(i), f.tau(j), f.tau(i).inverse(), f.gamma(j).inverse()]));
            relators.push(f.prod(&[f.tau(i), f.gamma(j), f.gamma(i).inverse(), f.tau(j).inverse()]));
        }
    }
    // Adjacent band pairs.
    for i in 1..n - 1 {
        relators.push(f.prod(&[
            f.alpha(i),
            f.beta(i + 1),
            f.alpha(i),
            f.alpha(i + 1).inverse(),
            f.beta(i).inverse(),
            f.alpha(i + 1).inverse(),
        ]));
        relators.push(f.prod(&[
            f.beta(i),
            f.alpha(i + 1),
            f.beta(i),
            f.beta(i + 1).inverse(),
            f.alpha(i).inverse(),
            f.beta(i + 1).inverse(),
        ]));
        relators.push(f.prod(&[
            f.gamma(i),
            f.tau(i + 1),
            f.gamma(i),
            f.gamma(i + 1).inverse(),
            f.tau(i).inverse(),
            f.gamma(i + 1).inverse(),
        ]));
        relators.push(f.prod(&[
            f.tau(i),
            f.gamma(i + 1),
            f.tau(i),
            f.tau(i + 1).inverse(),
            f.gamma(i).inverse(),
            f.tau(i + 1).inverse(),
        ]));
    }
    // Band and point generators at disjoint positions.
    for i in 1..n {
        for j in 1..=n {
            if j == i || j == i + 1 {
                continue;
            }
            relators.push(f.prod(&[f.alpha(i), f.kappa(j), f.tau(i).inverse(), f.eta(j).inverse()]));
            relators.push(f.prod(&[f.beta(i), f.eta(j), f.gamma(i).inverse(), f.kappa(j).inverse()]));
            relators.push(f.prod(&[f.gamma(i), f.lambda(j), f.beta(i).inverse(), f.theta(j).inverse()]));
            relators.push(f.prod(&[f.tau(i), f.theta(j), f.alpha(i).inverse(), f.lambda(j).inverse()]));
        }
    }
    // Consecutive point generators through one band.
    for i in 1..n {
        relators.push(f.prod(&[f.beta(i).inverse(), f.kappa(i), f.tau(i).inverse(), f.eta(i + 1).inverse()]));
        relators.push(f.prod(&[f.alpha(i).inverse(), f.eta(i), f.gamma(i).inverse(), f.kappa(i + 1).inverse()]));
        relators.push(f.prod(&[f.tau(i).inverse(), f.lambda(i), f.beta(i).inverse(), f.theta(i + 1).inverse()]));
        relators.push(f.prod(&[f.gamma(i).inverse(), f.theta(i), f.alpha(i).inverse(), f.lambda(i + 1).inverse()]));
    }
    // Commutators of consecutive point generators against a full band.
    for i in 1..n {
        relators.push(f.prod(&[
            f.lambda(i + 1).inverse(),
            f.eta(i).inverse(),
            f.eta(i + 1),
            f.lambda(i),
            f.beta(i).inverse(),
            f.alpha(i).inverse(),
        ]));
        relators.push(f.prod(&[
            f.theta(i + 1).inverse(),
            f.kappa(i).inverse(),
            f.kappa(i + 1),
            f.theta(i),
            f.alpha(i).inverse(),
            f.beta(i).inverse(),
        ]));
        relators.push(f.prod(&[
            f.kappa(i + 1).inverse(),
            f.theta(i).inverse(),
            f.theta(i + 1),
            f.kappa(i),
            f.tau(i).inverse(),
            f.gamma(i).inverse(),
        ]));
        relators.push(f.prod(&[
            f.eta(i + 1).inverse(),
            f.lambda(i).inverse(),
            f.lambda(i + 1),
            f.eta(i),
            f.gamma(i).inverse(),
            f.tau(i).inverse(),
        ]));
    }
    // The four rewritten surface relators: an alternating band word closed
    // off by point-generator letters at position one.
    let mut seq_wrap: Vec<usize> = (2..n).collect();
    seq_wrap.extend((2..n).rev());
    seq_wrap.push(1);
    let mut seq_lead: Vec<usize> = vec![1];
    seq_lead.extend(2..n);
    seq_lead.extend((2..n).rev());

    let alternate = |first: fn(&Family, usize) -> Word, second: fn(&Family, usize) -> Word, seq: &[usize]| -> Vec<Word> {
        seq.iter()
            .enumerate()
            .map(|(pos, &i)| if pos % 2 == 0 { first(&f, i) } else { second(&f, i) })
            .collect()
    };
    let mut form1 = alternate(Family::beta, Family::alpha, &seq_wrap);
    form1.push(f.lambda(1).inverse());
    form1.push(f.eta(1).inverse());
    relators.push(f.prod(&form1));
    let mut form2 = alternate(Family::beta, Family::alpha, &seq_lead);
    form2.push(f.theta(1).inverse());
    relators.push(f.prod(&form2));
    let mut form3 = alternate(Family::tau, Family::gamma, &seq_wrap);
    form3.push(f.theta(1).inverse());
    relators.push(f.prod(&form3));
    let mut form4 = alternate(Family::tau, Family::gamma, &seq_lead);
    form4.push(f.eta(1).inverse());
    form4.push(f.lambda(1).inverse());
    relators.push(f.prod(&form4));

    Ok(Presentation::new(&f.alphabet, relators)?)
}

/// Each rewriting generator as an ambient word, indexed like the family
/// alphabet.
pub fn fullpres_dictionary(bg: &BraidGroup) -> Vec<Word> {
    let n = bg.n();
    let alphabet = bg.alphabet();
    let s1 = bg.sigma(1);
    let r1 = bg.rho(1);
    let prod = |parts: &[&Word]| Word::product(alphabet, parts.iter().copied()).expect("single alphabet");
    let mut words = Vec::with_capacity(gamma2_gen_count(n));
    for i in 2..n {
        words.push(prod(&[&bg.sigma(i), &s1.inverse()]));
    }
    for i in 1..n {
        words.push(prod(&[&s1, &bg.sigma(i)]));
    }
    for i in 2..n {
        words.push(prod(&[&s1, &r1, &bg.sigma(i), &s1.inverse(), &r1.inverse(), &s1.inverse()]));
    }
    for i in 1..n {
        words.push(prod(&[&s1, &r1, &s1, &bg.sigma(i), &r1.inverse(), &s1.inverse()]));
    }
    for j in 1..=n {
        words.push(prod(&[&bg.rho(j), &s1.inverse(), &r1.inverse(), &s1.inverse()]));
    }
    for j in 2..=n {
        words.push(prod(&[&s1, &bg.rho(j), &r1.inverse(), &s1.inverse()]));
    }
    for j in 1..=n {
        words.push(prod(&[&s1, &r1, &bg.rho(j), &s1.inverse()]));
    }
    for j in 1..=n {
        words.push(prod(&[&s1, &r1, &s1, &bg.rho(j)]));
    }
    words
}

/// The mod-two exponent-sum quotient onto the Klein four group, as a
/// degree-four permutation homomorphism.
pub fn klein_quotient(bg: &BraidGroup) -> PermHom {
    let n = bg.n();
    let swap_band = Permutation::from_images(vec![1, 0, 3, 2]).expect("bijection");
    let swap_point = Permutation::from_images(vec![2, 3, 0, 1]).expect("bijection");
    let mut images = Vec::with_capacity(2 * n - 1);
    for _ in 1..n {
        images.push(swap_band.clone());
    }
    for _ in 1..=n {
        images.push(swap_point.clone());
    }
    PermHom::new(bg.presentation().clone(), images).expect("images respect the alphabet")
}

/// The four coset representatives used throughout: the identity, s1,
/// s1 r1, s1 r1 s1.
pub fn dictionary_transversal(bg: &BraidGroup) -> Vec<Word> {
    let s1 = bg.sigma(1);
    let r1 = bg.rho(1);
    let prod = |parts: &[&Word]| {
        Word::product(bg.alphabet(), parts.iter().copied()).expect("single alphabet")
    };
    vec![
        Word::identity(bg.alphabet()),
        s1.clone(),
        prod(&[&s1, &r1]),
        prod(&[&s1, &r1, &s1]),
    ]
}

/// The subgroup presentation rewritten over the dictionary transversal.
pub fn gamma2_subgroup(bg: &BraidGroup) -> Result<(CosetTable, SubgroupPresentation), EnumerationError> {
    let h = klein_quotient(bg);
    let t = kernel_coset_table(&h)?;
    let transversal = t.index_transversal(&dictionary_transversal(bg))?;
    let sub = subgroup_presentation(bg.presentation(), &t, &transversal)?;
    Ok((t, sub))
}

/// Maps each rewriting generator of `sub` to its family-alphabet index, by
/// coset representative and ambient letter.
pub fn schreier_naming(
    bg: &BraidGroup,
    sub: &SubgroupPresentation,
    family: &Arc<Alphabet>,
) -> Vec<usize> {
    let reps = dictionary_transversal(bg);
    let class_of = |w: &Word| -> usize {
        reps.iter().position(|r| r == w).expect("transversal words are the four representatives")
    };
    let band_class = ["a", "b", "g", "t"];
    let point_class = ["e", "k", "l", "h"];
    sub.presentation
        .alphabet()
        .names()
        .iter()
        .map(|name| {
            let (ambient, coset) = name.split_once('@').expect("rewriting names carry a coset");
            let c: usize = coset.parse().expect("coset suffix is numeric");
            // Class is keyed on the representative word, not the coset id,
            // so a different enumeration order cannot mislabel generators.
            let class = class_of(&sub.transversal[c]);
            let idx = &ambient[1..];
            let target = match &ambient[..1] {
                "s" => format!("{}{}", band_class[class], idx),
                "r" => format!("{}{}", point_class[class], idx),
                _ => unreachable!("ambient names start with s or r"),
            };
            family.id(&target).expect("every surviving rewriting generator has a family name")
        })
        .collect()
}

/// The 25-letter alphabet of the four-strand computation, in its published
/// naming.
pub fn dsb4_alphabet() -> Arc<Alphabet> {
    Alphabet::new([
        "A1", "A3", "A4", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C4", "D1", "D2", "D3",
        "D4", "X2", "X4", "Y1", "Y2", "Y3", "Y4", "Z1", "Z2", "Z3", "Z4",
    ])
    .expect("names are distinct")
}

const DSB4_RELATORS: [&str; 64] = [
    "Z2 X2^-1 Z1^-1",
    "X2 Z1 Z2^-1",
    "Z4 X4^-1 Z3^-1",
    "X4 Z3 Z4^-1",
    "Y2 Y1^-1 X2^-1 Y1^-1",
    "X2 Y1 X2 Y2^-2",
    "Y4 Y3^-1 X4^-1 Y3^-1",
    "X4 Y3 X4 Y4^-2",
    "Y1 Z2 Y1 Z1^-1 Y2^-1 Z1^-1",
    "Y2 Z1 Y2 Z2^-1 Y1^-1 Z2^-1",
    "Y3 Z4 Y3 Z3^-1 Y4^-1 Z3^-1",
    "Y4 Z3 Y4 Z4^-1 Y3^-1 Z4^-1",
    "C2 X4^-1 C1^-1",
    "X2 C1 C2^-1",
    "C4 X2^-1 C3^-1",
    "X4 C3 C4^-1",
    "D2 X4^-1 D1^-1",
    "X2 D1 D2^-1",
    "D4 X2^-1 D3^-1",
    "X4 D3 D4^-1",
    "Y1 Y4^-1 A1^-1",
    "Y2 A1 Y3^-1",
    "Y3 A4 Y2^-1 A3^-1",
    "Y4 A3 Y1^-1 A4^-1",
    "Y1 D2 Y4^-1 D1^-1",
    "Y2 D1 Y3^-1 D2^-1",
    "Y3 D4 Y2^-1 D3^-1",
    "Y4 D3 Y1^-1 D4^-1",
    "Z1 Z4^-1 A1^-1",
    "Z2 A1 Z3^-1",
    "Z3 A4 Z2^-1 A3^-1",
    "Z4 A3 Z1^-1 A4^-1",
    "Z1 B2 Z4^-1 B1^-1",
    "Z2 B1 Z3^-1 B2^-1",
    "Z3 B4 Z2^-1 B3^-1",
    "Z4 B3 Z1^-1 B4^-1",
    "B1 X4 X2",
    "B2 A1^-1",
    "X4^-1 A4 X2^-1 B3^-1",
    "A3 B4^-1",
    "Y2^-1 B2 Y4^-1 C1^-1",
    "Y1^-1 B1 Y3^-1 C2^-1",
    "Y4^-1 B4 Y2^-1 C3^-1",
    "Y3^-1 B3 Y1^-1 C4^-1",
    "Z1^-1 C1 Z3^-1 D2^-1",
    "Z2^-1 C2 Z4^-1 D1^-1",
    "Z3^-1 C3 Z1^-1 D4^-1",
    "Z4^-1 C4 Z2^-1 D3^-1",
    "B4^-1 A1^-1 B1 A4 X2^-1",
    "B2 A3 X2^-1 B3^-1",
    "B2^-1 A3^-1 B3 X4^-1",
    "B1^-1 A4^-1 B4 A1 X4^-1",
    "C4^-1 B1^-1 C1 B4 Y2^-1 Y1^-1",
    "C3^-1 B2^-1 C2 B3 Y1^-1 Y2^-1",
    "C2^-1 B3^-1 C3 B2 Y4^-1 Y3^-1",
    "C1^-1 B4^-1 C4 B1 Y3^-1 Y4^-1",
    "D4^-1 C1^-1 D1 C4 Z2^-1 Z1^-1",
    "D3^-1 C2^-1 D2 C3 Z1^-1 Z2^-1",
    "D2^-1 C3^-1 D3 C2 Z4^-1 Z3^-1",
    "D1^-1 C4^-1 D4 C1 Z3^-1 Z4^-1",
    "Y2 Z1 Z2 Y1 X2 A4^-1 A1^-1",
    "X2 Y1 Z2 Z1 Y2 A3^-1",
    "Y4 Z3 Z4 Y3 X4 A3^-1",
    "X4 Y3 Z4 Z3 Y4 A1^-1 A4^-1",
];

/// The four-strand presentation written out relator by relator on the
/// 25-letter alphabet.
pub fn dsb4_presentation() -> Presentation {
    let alphabet = dsb4_alphabet();
    let relators = DSB4_RELATORS
        .iter()
        .map(|t| Word::parse(&alphabet, t).expect("relator strings parse"))
        .collect();
    Presentation::new(&alphabet, relators).expect("shared alphabet")
}

const FAMILY_TO_DSB4: [(&str, &str); 25] = [
    ("a2", "Y1"),
    ("a3", "Z1"),
    ("b1", "X2"),
    ("b2", "Y2"),
    ("b3", "Z2"),
    ("g2", "Y3"),
    ("g3", "Z3"),
    ("t1", "X4"),
    ("t2", "Y4"),
    ("t3", "Z4"),
    ("e1", "A1"),
    ("e2", "B1"),
    ("e3", "C1"),
    ("e4", "D1"),
    ("k2", "B2"),
    ("k3", "C2"),
    ("k4", "D2"),
    ("h1", "A3"),
    ("h2", "B3"),
    ("h3", "C3"),
    ("h4", "D3"),
    ("l1", "A4"),
    ("l2", "B4"),
    ("l3", "C4"),
    ("l4", "D4"),
];

/// Family index -> 25-letter index renaming for n = 4.
pub fn dsb4_naming(family: &Arc<Alphabet>, dsb4: &Arc<Alphabet>) -> Vec<usize> {
    let mut naming = vec![usize::MAX; family.len()];
    for (from, to) in FAMILY_TO_DSB4 {
        let f = family.id(from).expect("family name");
        naming[f] = dsb4.id(to).expect("target name");
    }
    assert!(naming.iter().all(|&v| v != usize::MAX));
    naming
}

/// Words in the 25-letter alphabet as ambient four-strand words.
pub fn dsb4_to_ambient(bg: &BraidGroup) -> fpgroup::GenMap {
    assert_eq!(bg.n(), 4);
    let family = family_alphabet(4);
    let dsb4 = dsb4_alphabet();
    let dict = fullpres_dictionary(bg);
    let mut images = vec![None; dsb4.len()];
    for (from, to) in FAMILY_TO_DSB4 {
        let f = family.id(from).expect("family name");
        let d = dsb4.id(to).expect("target name");
        images[d] = Some(dict[f].clone());
    }
    fpgroup::GenMap::new(&dsb4, bg.alphabet(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::relator_count;

    #[test]
    fn generator_counts() {
        for n in 3..=6 {
            let p = gamma2_family_presentation(n).unwrap();
            assert_eq!(p.gen_count(), 8 * n - 7, "n = {n}");
            assert_eq!(p.relators().len(), 4 * relator_count(n), "n = {n}");
        }
    }

    #[test]
    fn dictionary_matches_the_family_layout() {
        for n in [3, 4, 5] {
            let bg = BraidGroup::new(n).unwrap();
            let dict = fullpres_dictionary(&bg);
            assert_eq!(dict.len(), gamma2_gen_count(n));
            // Every dictionary word has an even total of both letter kinds,
            // so it lies in the kernel of the mod-two quotient.
            let h = klein_quotient(&bg);
            for w in &dict {
                assert!(h.evaluate(w).is_identity());
            }
        }
    }

    #[test]
    fn conjugation_by_s1r1_permutes_the_dictionary_freely() {
        for n in [3, 4, 5] {
            let bg = BraidGroup::new(n).unwrap();
            let family = family_alphabet(n);
            let dict = fullpres_dictionary(&bg);
            let word = |name: String| -> Word {
                match family.id(&name) {
                    Some(g) => dict[g].clone(),
                    None => Word::identity(bg.alphabet()),
                }
            };
            let s1r1 = Word::product(bg.alphabet(), [&bg.sigma(1), &bg.rho(1)]).unwrap();
            let conj = |w: &Word| w.conjugated_by(&s1r1).unwrap();
            let prod = |parts: &[&Word]| Word::product(bg.alphabet(), parts.iter().copied()).unwrap();
            let l1 = word("l1".into());
            for i in 2..n {
                assert_eq!(conj(&word(format!("a{i}"))), word(format!("g{i}")));
                assert_eq!(
                    conj(&word(format!("g{i}"))),
                    prod(&[&l1, &word(format!("a{i}")), &l1.inverse()])
                );
            }
            for i in 1..n {
                assert_eq!(conj(&word(format!("b{i}"))), word(format!("t{i}")));
                assert_eq!(
                    conj(&word(format!("t{i}"))),
                    prod(&[&l1, &word(format!("b{i}")), &l1.inverse()])
                );
            }
            for j in 1..=n {
                assert_eq!(conj(&word(format!("l{j}"))), prod(&[&l1, &word(format!("k{j}"))]));
                assert_eq!(
                    conj(&word(format!("e{j}"))),
                    prod(&[&word(format!("h{j}")), &l1.inverse()])
                );
                assert_eq!(
                    conj(&word(format!("h{j}"))),
                    prod(&[&l1, &word(format!("e{j}"))])
                );
                if j >= 2 {
                    assert_eq!(
                        conj(&word(format!("k{j}"))),
                        prod(&[&word(format!("l{j}")), &l1.inverse()])
                    );
                }
            }
        }
    }

    #[test]
    fn transversal_words_hit_all_four_cosets() {
        let bg = BraidGroup::new(4).unwrap();
        let (t, sub) = gamma2_subgroup(&bg).unwrap();
        assert_eq!(t.n_cosets(), 4);
        assert_eq!(sub.presentation.gen_count(), 25);
        assert_eq!(sub.raw_relator_count, 64);
    }

    #[test]
    fn four_strand_list_parses_to_sixty_four() {
        let p = dsb4_presentation();
        assert_eq!(p.gen_count(), 25);
        assert_eq!(p.relators().len(), 64);
    }

    #[test]
    fn renaming_is_a_bijection() {
        let family = family_alphabet(4);
        let dsb4 = dsb4_alphabet();
        let naming = dsb4_naming(&family, &dsb4);
        let mut seen = vec![false; 25];
        for &v in &naming {
            assert!(!seen[v]);
            seen[v] = true;
        }
    }

    #[test]
    fn ambient_expansion_of_the_25_letters_lands_in_the_kernel() {
        let bg = BraidGroup::new(4).unwrap();
        let map = dsb4_to_ambient(&bg);
        let dsb4 = dsb4_alphabet();
        let h = klein_quotient(&bg);
        for g in 0..dsb4.len() {
            let w = Word::gen(&dsb4, g).substitute(&map).unwrap();
            assert!(h.evaluate(&w).is_identity(), "letter {}", dsb4.name(g));
        }
    }
}
