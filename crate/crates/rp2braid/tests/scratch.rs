use fpgroup::coset::EnumerationLimits;
use fpgroup::tietze::{simplify, TietzeBudget};
use rp2braid::braid::{braid_presentation, BraidGroup};
use rp2braid::gamma2::gamma2_subgroup;
use rp2braid::series::{derived_series, stage_quotient};

#[test]
fn b4_stage3_parts() {
    use fpgroup::abelian::abelian_invariants;
    use fpgroup::coset::kernel_coset_table;
    use fpgroup::rs::subgroup_presentation;
    use rp2braid::series::abelian_quotient_hom;

    let p = braid_presentation(4).unwrap();
    let limits = EnumerationLimits::default();
    let stages = derived_series(&p, 2, &limits).unwrap();
    let s2 = stages.last().unwrap();
    let t0 = std::time::Instant::now();
    let h = abelian_quotient_hom(&s2.presentation, 2).unwrap();
    let t = kernel_coset_table(&h).unwrap();
    let transversal = t.schreier_transversal();
    let sub = subgroup_presentation(&s2.presentation, &t, &transversal).unwrap();
    println!(
        "raw stage3: gens {} relators {} maxlen {} rs elapsed {:?}",
        sub.presentation.gen_count(),
        sub.presentation.relators().len(),
        sub.presentation.relators().iter().map(|r| r.len()).max().unwrap_or(0),
        t0.elapsed()
    );
    let t1 = std::time::Instant::now();
    let inv = abelian_invariants(&sub.presentation);
    println!("raw ab {} elapsed {:?}", inv, t1.elapsed());
}

#[test]
fn b4_tietze_alone() {
    let bg = BraidGroup::new(4).unwrap();
    let (_, sub) = gamma2_subgroup(&bg).unwrap();
    println!(
        "raw gens {} relators {}",
        sub.presentation.gen_count(),
        sub.presentation.relators().len()
    );
    let t0 = std::time::Instant::now();
    let s = simplify(&sub.presentation, &TietzeBudget::default()).unwrap();
    println!(
        "simplified gens {} relators {} maxlen {} elapsed {:?}",
        s.presentation.gen_count(),
        s.presentation.relators().len(),
        s.presentation.relators().iter().map(|r| r.len()).max().unwrap_or(0),
        t0.elapsed()
    );
}

#[test]
fn b3_depth3() {
    let p = braid_presentation(3).unwrap();
    let limits = EnumerationLimits::default();
    let t0 = std::time::Instant::now();
    let stages = derived_series(&p, 3, &limits).unwrap();
    for s in &stages {
        println!(
            "depth {} gens {} relators {} inv {} index {}",
            s.depth,
            s.presentation.gen_count(),
            s.presentation.relators().len(),
            s.invariants,
            s.index_in_parent
        );
    }
    println!("series elapsed {:?}", t0.elapsed());
    let t1 = std::time::Instant::now();
    let (t, g) = stage_quotient(&p, &stages[2], &limits).unwrap();
    println!("depth2 quotient cosets {} order {} elapsed {:?}", t.n_cosets(), g.order(), t1.elapsed());
    let t2 = std::time::Instant::now();
    let (t, g) = stage_quotient(&p, &stages[3], &limits).unwrap();
    println!("depth3 quotient cosets {} order {} elapsed {:?}", t.n_cosets(), g.order(), t2.elapsed());
}

#[test]
fn b4_depth3() {
    let p = braid_presentation(4).unwrap();
    let limits = EnumerationLimits::default();
    for depth in 1..=3 {
        let t0 = std::time::Instant::now();
        let stages = derived_series(&p, depth, &limits).unwrap();
        let s = stages.last().unwrap();
        println!(
            "depth {} gens {} relators {} maxlen {} inv {} index {} elapsed {:?}",
            s.depth,
            s.presentation.gen_count(),
            s.presentation.relators().len(),
            s.presentation.relators().iter().map(|r| r.len()).max().unwrap_or(0),
            s.invariants,
            s.index_in_parent,
            t0.elapsed()
        );
    }
}
