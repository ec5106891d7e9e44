use fpgroup::rs::match_presentations;
use fpgroup::word::{Letter, Word};
use rp2braid::braid::BraidGroup;
use rp2braid::gamma2::{gamma2_family_presentation, gamma2_subgroup, schreier_naming};

#[test]
fn dump_n3() {
    let bg = BraidGroup::new(3).unwrap();
    let (_, sub) = gamma2_subgroup(&bg).unwrap();
    let family = gamma2_family_presentation(3).unwrap();
    let naming = schreier_naming(&bg, &sub, family.alphabet());
    let report = match_presentations(&sub.presentation, &family, &naming);
    println!("== unmatched rewritten, translated to family names ==");
    for &i in &report.unmatched_left {
        let r = &sub.presentation.relators()[i];
        let tr = Word::from_letters(
            family.alphabet(),
            r.letters().iter().map(|l| Letter::new(naming[l.gen], l.inv)),
        );
        println!("L{i:>3}: {tr}");
    }
    println!("== unmatched family ==");
    for &i in &report.unmatched_right {
        println!("R{i:>3}: {}", family.relators()[i]);
    }
}
