//! Action tables on free groups: the twist actions of a rank-three free
//! group and an order-four element on a rank-five free group, the linking
//! basis change, and the semidirect presentation the tables assemble into.

use std::sync::Arc;

use fpgroup::word::{Alphabet, GenMap, Word};
use fpgroup::Presentation;

const F5_NAMES: [&str; 5] = ["f1", "f2", "f3", "f4", "f5"];
const FG_NAMES: [&str; 8] = ["f1", "f2", "f3", "f4", "f5", "g1", "g2", "g3"];
const E5_NAMES: [&str; 5] = ["e1", "e2", "e3", "e4", "e5"];

const ACT_Z4: [(&str, &str); 8] = [
    ("f1", "f3 f1^-1 f3^-1"),
    ("f2", "f3 f1 f2^-1 f1^-1 f3^-1"),
    ("f3", "f3^-1"),
    ("f4", "f4^-1"),
    ("f5", "f4 f5^-1 f4^-1"),
    ("g1", "g1^-1"),
    ("g2", "g2^-1"),
    ("g3", "g2^-1 g3^-1 g2"),
];

const ACT_G1: [(&str, &str); 5] = [
    ("f1", "f1"),
    ("f2", "f3 f1 f2 f1^-1 f3^-1"),
    ("f3", "f3"),
    ("f4", "f4"),
    ("f5", "f3 f4 f5 f4^-1 f3^-1"),
];

const ACT_G2: [(&str, &str); 5] = [
    ("f1", "f4 f5 f2^-1 f1 f2 f5^-1 f4^-1"),
    ("f2", "f4 f5 f2^-1 f1^-1 f2 f1 f2 f5^-1 f4^-1"),
    ("f3", "f4 f5 f3 f5^-1 f4^-1"),
    ("f4", "f4"),
    ("f5", "f5"),
];

const ACT_G3: [(&str, &str); 5] = [
    ("f1", "f2^-1 f3^-1 f5^-1 f4^-1 f2 f4 f5 f3 f1 f3^-1 f5^-1 f4^-1 f2^-1 f4 f5 f3 f2"),
    ("f2", "f2^-1 f3^-1 f5^-1 f4^-1 f2 f4 f5 f3 f2"),
    ("f3", "f2^-1 f1^-1 f3^-1 f5^-1 f3 f1 f2 f4^-1 f2^-1 f4 f5 f3 f2"),
    ("f4", "f4"),
    ("f5", "f2^-1 f1^-1 f3^-1 f5 f3 f1 f2"),
];

const ACT_PHI3: [(&str, &str); 5] = [
    ("e1", "e4 e5 e2^-1 e1 e2 e5^-1 e4^-1"),
    ("e2", "e4 e5 e2^-1 e1^-1 e2 e1 e2 e5^-1 e4^-1"),
    ("e3", "e4 e5 e3 e5^-1 e4^-1"),
    ("e4", "e4"),
    ("e5", "e5"),
];

const E_BASIS: [(&str, &str); 5] =
    [("e1", "f1"), ("e2", "f2"), ("e3", "f4 f5 f3"), ("e4", "f4"), ("e5", "f5")];

const F_TO_E: [(&str, &str); 5] = [
    ("f1", "e1"),
    ("f2", "e2"),
    ("f3", "e5^-1 e4^-1 e3"),
    ("f4", "e4"),
    ("f5", "e5"),
];

pub fn f5_alphabet() -> Arc<Alphabet> {
    Alphabet::new(F5_NAMES).expect("distinct names")
}

pub fn fg_alphabet() -> Arc<Alphabet> {
    Alphabet::new(FG_NAMES).expect("distinct names")
}

pub fn e5_alphabet() -> Arc<Alphabet> {
    Alphabet::new(E5_NAMES).expect("distinct names")
}

fn table_map(
    source: &Arc<Alphabet>,
    target: &Arc<Alphabet>,
    pairs: &[(&str, &str)],
) -> GenMap {
    let mut images = vec![None; source.len()];
    for (name, image) in pairs {
        let g = source.id(name).expect("table name");
        images[g] = Some(Word::parse(target, image).expect("table word parses"));
    }
    GenMap::new(source, target, images)
}

/// The order-four twist on all eight generators.
pub fn act_z4() -> GenMap {
    let a = fg_alphabet();
    table_map(&a, &a, &ACT_Z4)
}

/// Conjugation action of the first rank-three generator on the rank-five
/// free group.
pub fn act_g1() -> GenMap {
    let a = f5_alphabet();
    table_map(&a, &a, &ACT_G1)
}

/// Conjugation action of the second rank-three generator.
pub fn act_g2() -> GenMap {
    let a = f5_alphabet();
    table_map(&a, &a, &ACT_G2)
}

/// Conjugation action of the third rank-three generator.
pub fn act_g3() -> GenMap {
    let a = f5_alphabet();
    table_map(&a, &a, &ACT_G3)
}

/// The second conjugation action written on the alternate basis.
pub fn act_phi3() -> GenMap {
    let a = e5_alphabet();
    table_map(&a, &a, &ACT_PHI3)
}

/// Alternate basis into the standard one.
pub fn e_basis() -> GenMap {
    table_map(&e5_alphabet(), &f5_alphabet(), &E_BASIS)
}

/// Standard basis into the alternate one.
pub fn f_to_e() -> GenMap {
    table_map(&f5_alphabet(), &e5_alphabet(), &F_TO_E)
}

/// Image of a word under an action table.
pub fn apply_action(map: &GenMap, w: &Word) -> Word {
    w.substitute(map).expect("action tables are total")
}

/// Abelianized action: one row per source generator, entries are target
/// exponent sums.
pub fn abelianized_rows(map: &GenMap) -> Vec<Vec<i64>> {
    map.images
        .iter()
        .map(|img| img.as_ref().expect("total map").exponent_vector())
        .collect()
}

/// The five exact word identities showing the alternate-basis table is the
/// standard-basis table transported through the basis change: returns
/// (transported, tabulated) per generator.
pub fn phi_rho3_sq_check() -> Vec<(Word, Word)> {
    let transport = e_basis()
        .then(&act_g2())
        .expect("basis then action")
        .then(&f_to_e())
        .expect("action then basis");
    let e5 = e5_alphabet();
    let tabulated = act_phi3();
    (0..e5.len())
        .map(|g| {
            let e = Word::gen(&e5, g);
            (apply_action(&transport, &e), apply_action(&tabulated, &e))
        })
        .collect()
}

/// The split extension assembled from the action tables: five fiber
/// generators, three twisting generators, one order-four generator acting
/// on everything.
pub fn semidirect_presentation() -> Presentation {
    let alphabet = Alphabet::new(["f1", "f2", "f3", "f4", "f5", "g1", "g2", "g3", "q"])
        .expect("distinct names");
    let word = |s: &str| Word::parse(&alphabet, s).expect("parses");
    let twist = |actor: &str, name: &str, image: &str| {
        word(name)
            .conjugated_by(&word(actor))
            .and_then(|c| c.concat(&word(image).inverse()))
            .expect("shared alphabet")
    };
    let mut relators = Vec::new();
    let tables: [&[(&str, &str)]; 3] = [&ACT_G1, &ACT_G2, &ACT_G3];
    for (k, table) in tables.iter().enumerate() {
        let g = format!("g{}", k + 1);
        for (name, image) in table.iter() {
            relators.push(twist(&g, name, image));
        }
    }
    for (name, image) in ACT_Z4.iter() {
        relators.push(twist("q", name, image));
    }
    relators.push(word("q^4"));
    Presentation::new(&alphabet, relators).expect("shared alphabet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpgroup::abelian::abelian_invariants;

    fn identity_rows(n: usize) -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect()
    }

    #[test]
    fn rank_three_actions_are_trivial_on_the_abelianization() {
        for map in [act_g1(), act_g2(), act_g3()] {
            assert_eq!(abelianized_rows(&map), identity_rows(5));
        }
        assert_eq!(abelianized_rows(&act_phi3()), identity_rows(5));
    }

    #[test]
    fn order_four_action_negates_the_abelianization() {
        let rows = abelianized_rows(&act_z4());
        let neg: Vec<Vec<i64>> = identity_rows(8)
            .into_iter()
            .map(|r| r.into_iter().map(|v| -v).collect())
            .collect();
        assert_eq!(rows, neg);
    }

    #[test]
    fn basis_change_round_trips() {
        let to_f = e_basis();
        let to_e = f_to_e();
        let e5 = e5_alphabet();
        let f5 = f5_alphabet();
        for g in 0..5 {
            let e = Word::gen(&e5, g);
            assert_eq!(apply_action(&to_e, &apply_action(&to_f, &e)), e);
            let f = Word::gen(&f5, g);
            assert_eq!(apply_action(&to_f, &apply_action(&to_e, &f)), f);
        }
    }

    #[test]
    fn transported_action_matches_the_tabulated_one() {
        for (lhs, rhs) in phi_rho3_sq_check() {
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn split_extension_abelianization() {
        let p = semidirect_presentation();
        assert_eq!(p.relators().len(), 24);
        assert_eq!(
            abelian_invariants(&p).to_string(),
            "(0, [2,2,2,2,2,2,2,2,4])"
        );
    }
}
