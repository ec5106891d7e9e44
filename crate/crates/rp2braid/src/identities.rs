//! Word identities among torsion elements, half twists, and commutator
//! generators of the surface braid groups, packaged for checking against a
//! registered family of finite quotients.

use fpgroup::coset::EnumerationLimits;
use fpgroup::kb::KbCaps;
use fpgroup::word::Word;
use fpgroup::wp::WordProblem;

use crate::braid::BraidGroup;
use crate::gamma2::klein_quotient;
use crate::models::symmetric_quotient;
use crate::series::{derived_series, stage_quotient, SeriesError};

/// One named identity between two words of the same group.
#[derive(Debug, Clone)]
pub struct NamedIdentity {
    pub id: String,
    pub lhs: Word,
    pub rhs: Word,
}

fn ident(id: impl Into<String>, lhs: Word, rhs: Word) -> NamedIdentity {
    NamedIdentity { id: id.into(), lhs, rhs }
}

/// The identity catalog for the n-strand group: torsion word forms for all
/// n, plus the three-strand conjugation tables.
pub fn consistency_identities(n: usize) -> Vec<NamedIdentity> {
    let bg = BraidGroup::new(n).expect("strand count");
    let a = bg.a_word();
    let mut out = Vec::new();

    out.push(ident("a-two-forms", a.clone(), bg.a_word_alt()));
    out.push(ident("a-power-is-point-run", a.pow(n as i64), bg.rho_descending(n)));
    if n >= 2 {
        let b = bg.b_word();
        out.push(ident("b-two-forms", b.clone(), bg.b_word_alt()));
        out.push(ident(
            "b-power-is-point-run",
            b.pow(n as i64 - 1),
            bg.rho_descending(n - 1),
        ));
    }

    // Conjugation by the torsion element of maximal order inverts every
    // generator.
    let an = a.pow(n as i64);
    for i in 1..n {
        out.push(ident(
            format!("full-point-run-inverts-s{i}"),
            bg.sigma(i).conjugated_by(&an).expect("same alphabet"),
            bg.sigma(i).inverse(),
        ));
    }
    for j in 1..=n {
        out.push(ident(
            format!("full-point-run-inverts-r{j}"),
            bg.rho(j).conjugated_by(&an).expect("same alphabet"),
            bg.rho(j).inverse(),
        ));
    }

    // The half twist reverses the point generators and inverts a.
    let delta = bg.garside();
    for i in 1..=n {
        out.push(ident(
            format!("half-twist-sends-r{i}"),
            bg.rho(i).conjugated_by(&delta).expect("same alphabet"),
            bg.rho(n + 1 - i).inverse(),
        ));
    }
    out.push(ident(
        "half-twist-inverts-a",
        a.conjugated_by(&delta).expect("same alphabet"),
        a.inverse(),
    ));
    let sigmas: Vec<Word> = (1..n).map(|i| bg.sigma(i)).collect();
    let mut band_run = bg.rho(1).inverse();
    for s in &sigmas {
        band_run = band_run.concat(s).expect("same alphabet");
    }
    out.push(ident("a-inverse-band-run-form", a.inverse(), band_run));

    if n == 3 {
        out.extend(three_strand_identities(&bg));
    }
    out
}

fn three_strand_identities(bg: &BraidGroup) -> Vec<NamedIdentity> {
    let prod = |parts: &[&Word]| {
        Word::product(bg.alphabet(), parts.iter().copied()).expect("single alphabet")
    };
    let a = bg.a_word();
    let b = bg.b_word();
    let delta = bg.garside();
    let [x, y, u, z1, z2, z3] = bg.m3_dictionary();
    let mut out = Vec::new();

    out.push(ident("b-squared-is-x", b.pow(2), x.clone()));
    out.push(ident("a-cubed-is-point-run", a.pow(3), bg.rho_descending(3)));
    out.push(ident(
        "b-garside-conjugates-to-band",
        prod(&[&b, &delta, &a.inverse()]),
        prod(&[&bg.sigma(1).inverse(), &bg.rho(1), &bg.sigma(1), &bg.rho(3).inverse()]),
    ));

    // The squares chain tying x, y, b, and the full twist together.
    out.push(ident("x-squared-is-y-squared", x.pow(2), y.pow(2)));
    out.push(ident("y-squared-is-b-fourth", y.pow(2), b.pow(4)));
    out.push(ident("b-fourth-is-full-twist", b.pow(4), bg.full_twist()));
    out.push(ident(
        "full-twist-is-band-product",
        bg.full_twist(),
        prod(&[&bg.band(1, 2), &bg.band(1, 3), &bg.band(2, 3)]),
    ));

    // Band expressions against point-generator squares.
    out.push(ident(
        "band-from-x-and-z1",
        bg.band(1, 2),
        prod(&[&x.pow(2), &z1]),
    ));
    out.push(ident(
        "z1-inverse-as-band-product",
        bg.rho(3).pow(-2),
        prod(&[&bg.band(1, 3), &bg.band(2, 3)]),
    ));

    // Conjugation tables of the index-twelve subgroup generators.
    let conj = |w: &Word, by: &Word| w.conjugated_by(by).expect("same alphabet");
    out.push(ident("x-on-z1", conj(&z1, &x), z1.inverse()));
    out.push(ident(
        "x-on-z2",
        conj(&z2, &x),
        prod(&[&z1.inverse(), &z3.inverse(), &z1]),
    ));
    out.push(ident(
        "x-on-z3",
        conj(&z3, &x),
        prod(&[&z1.inverse(), &z2.inverse(), &z1]),
    ));
    out.push(ident("y-on-z1", conj(&z1, &y), prod(&[&z2, &z3, &z1])));
    out.push(ident("y-on-z2", conj(&z2, &y), z2.inverse()));
    out.push(ident(
        "y-on-z3",
        conj(&z3, &y),
        prod(&[&z2, &z3.inverse(), &z2.inverse()]),
    ));
    out.push(ident("u-on-z1", conj(&z1, &u), prod(&[&x.pow(2), &z3, &z1])));
    out.push(ident("u-on-z2", conj(&z2, &u), prod(&[&x.pow(2), &z1.inverse()])));
    out.push(ident(
        "u-on-z3",
        conj(&z3, &u),
        prod(&[&x.pow(2), &z2.inverse(), &z1.inverse(), &z3.inverse()]),
    ));
    out.push(ident("u-on-x", conj(&x, &u), prod(&[&x, &y])));
    out.push(ident("u-on-y", conj(&y, &u), x.clone()));

    // The order-three twist on the index-twelve generators.
    let a4 = a.pow(4);
    out.push(ident("twist-sends-x-to-xy", conj(&x, &a4), prod(&[&x, &y])));
    out.push(ident("twist-sends-y-to-x", conj(&y, &a4), x.clone()));
    out.push(ident(
        "twist-on-z2",
        conj(&z2, &a4),
        prod(&[&bg.full_twist(), &bg.rho(3).pow(-2)]),
    ));
    out.push(ident(
        "twist-on-r3",
        conj(&bg.rho(3), &a4),
        prod(&[&bg.rho(3), &y]),
    ));
    out.push(ident(
        "twist-on-z1",
        conj(&z1, &a4),
        prod(&[&bg.full_twist(), &z3, &z1]),
    ));
    out.push(ident(
        "s1-on-twist",
        conj(&a4, &bg.sigma(1)),
        prod(&[
            &bg.rho(2).inverse(),
            &bg.rho(1).inverse(),
            &bg.rho(2).inverse(),
            &bg.rho(3).inverse(),
            &a.pow(8),
        ]),
    ));
    out
}

/// Word-problem context for the n-strand group with its standard finite
/// quotients registered; three strands also get the index-12 and index-192
/// coset actions.
pub fn braid_word_problem(
    bg: &BraidGroup,
    caps: &KbCaps,
    limits: &EnumerationLimits,
) -> Result<WordProblem, SeriesError> {
    let mut wp = WordProblem::new(bg.presentation().clone(), caps);
    wp.register_quotient("mod2-pair", klein_quotient(bg));
    wp.register_quotient("strand-sym", symmetric_quotient(bg));
    if bg.n() == 3 {
        let table_hom = |t: &fpgroup::coset::CosetTable| {
            let images = (0..bg.presentation().gen_count())
                .map(|g| t.permutation(g))
                .collect();
            fpgroup::presentation::PermHom::new(bg.presentation().clone(), images)
        };
        let stages = derived_series(bg.presentation(), 3, limits)?;
        let (t12, _) = stage_quotient(bg.presentation(), &stages[2], limits)?;
        wp.register_quotient("coset-12", table_hom(&t12)?);
        let (t192, _) = stage_quotient(bg.presentation(), &stages[3], limits)?;
        wp.register_quotient("coset-192", table_hom(&t192)?);
    }
    Ok(wp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(consistency_identities(2).len(), 4 + 3 + 3 + 1);
        assert_eq!(consistency_identities(4).len(), 4 + 7 + 5 + 1);
        assert!(consistency_identities(3).len() > 30);
    }

    #[test]
    fn two_strand_identities_all_hold_in_the_faithful_quotient() {
        let bg = BraidGroup::new(2).unwrap();
        let wp = braid_word_problem(&bg, &KbCaps::default(), &EnumerationLimits::default())
            .unwrap();
        for id in consistency_identities(2) {
            let v = wp.check_identity(&id.lhs, &id.rhs);
            assert!(v.holds_in_all_quotients(), "{}: {v:?}", id.id);
        }
    }

    #[test]
    fn three_strand_identities_are_never_refuted() {
        let bg = BraidGroup::new(3).unwrap();
        let wp = braid_word_problem(&bg, &KbCaps::default(), &EnumerationLimits::default())
            .unwrap();
        for id in consistency_identities(3) {
            let v = wp.check_identity(&id.lhs, &id.rhs);
            assert!(v.holds_in_all_quotients(), "{}: {v:?}", id.id);
        }
    }

    #[test]
    fn torsion_orders_hold_and_shorter_powers_are_refuted() {
        let bg = BraidGroup::new(3).unwrap();
        let wp = braid_word_problem(&bg, &KbCaps::default(), &EnumerationLimits::default())
            .unwrap();
        let a = bg.a_word();
        let b = bg.b_word();
        // The full twist a^6 = b^4 is central and lies in every derived
        // term, so no quotient in the family can refute it.
        for k in 1..=12i64 {
            let refuted = wp.check_trivial(&a.pow(k)).is_refuted();
            assert_eq!(refuted, k % 6 != 0, "a^{k}");
        }
        for k in 1..=8i64 {
            let refuted = wp.check_trivial(&b.pow(k)).is_refuted();
            assert_eq!(refuted, k % 4 != 0, "b^{k}");
        }
    }
}
