//! Finite target groups for quotient identification, the order-48 affine
//! group on a rank-four binary space, two auxiliary presentations mapping
//! onto it, and the standard finite quotients of the surface braid groups.

use std::str::FromStr;

use fpgroup::coset::{todd_coxeter, EnumerationLimits};
use fpgroup::perm::{FiniteGroup, NamedModel, Permutation};
use fpgroup::presentation::{FpHom, PermHom};
use fpgroup::word::Word;
use fpgroup::Presentation;

use crate::braid::{braid_presentation, BraidGroup};
use crate::gamma2::gamma2_family_presentation;

pub fn q8_presentation() -> Presentation {
    Presentation::parse_parts(&["a", "b"], &["a^4", "b^2 a^-2", "b a b^-1 a"]).expect("parses")
}

pub fn q16_presentation() -> Presentation {
    Presentation::parse_parts(&["a", "b"], &["a^8", "b^2 a^-4", "b a b^-1 a"]).expect("parses")
}

pub fn d12_presentation() -> Presentation {
    Presentation::parse_parts(&["r", "s"], &["r^6", "s^2", "r s r s"]).expect("parses")
}

pub fn dic12_presentation() -> Presentation {
    Presentation::parse_parts(&["a", "b"], &["a^6", "b^2 a^-3", "b a b^-1 a"]).expect("parses")
}

pub fn a4_presentation() -> Presentation {
    Presentation::parse_parts(&["s", "t"], &["s^2", "t^3", "s t s t s t"]).expect("parses")
}

/// The semidirect product of a rank-four binary space by a three-cycle use
/// of basis pairs, order 48.
pub fn l_presentation() -> Presentation {
    Presentation::parse_parts(
        &["w1", "w2", "w3", "w4", "t"],
        &[
            "w1^2",
            "w2^2",
            "w3^2",
            "w4^2",
            "w1 w2 w1^-1 w2^-1",
            "w1 w3 w1^-1 w3^-1",
            "w1 w4 w1^-1 w4^-1",
            "w2 w3 w2^-1 w3^-1",
            "w2 w4 w2^-1 w4^-1",
            "w3 w4 w3^-1 w4^-1",
            "t^3",
            "t w1 t^-1 w2^-1",
            "t w2 t^-1 w2^-1 w1^-1",
            "t w3 t^-1 w4^-1",
            "t w4 t^-1 w4^-1 w3^-1",
        ],
    )
    .expect("parses")
}

/// Seven-generator presentation that surjects onto the order-48 group; its
/// own size is left to enumeration.
pub fn lambda_presentation() -> Presentation {
    Presentation::parse_parts(
        &["Y1", "Y3", "Z1", "Z3", "A", "C", "D"],
        &[
            "Y1^3",
            "Y3^3",
            "Y1 Z1 Y1 Z1 Y1 Z1",
            "Y3 Z3 Y3 Z3 Y3 Z3",
            "Z1^2",
            "Z3^2",
            "A^2",
            "C^2",
            "D^2",
            "A D^-1 C^-1",
            "A Y3^-1 Y1^-1",
            "A Z3^-1 Z1^-1",
            "C Y1^-1 Y3^-1",
            "Y1 D Y3 D",
            "Y3 Y1 Y3 Y1",
            "A C A^-1 C^-1",
            "A D A^-1 D^-1",
            "A Z1 A^-1 Z1^-1",
            "A Z3 A^-1 Z3^-1",
            "C D C^-1 D^-1",
            "C Z1 C^-1 Z1^-1",
            "C Z3 C^-1 Z3^-1",
            "D Z1 D^-1 Z1^-1",
            "D Z3 D^-1 Z3^-1",
            "Z1 Z3 Z1^-1 Z3^-1",
        ],
    )
    .expect("parses")
}

/// The three-strand commutator subgroup on six generators: a central
/// extension data presentation with an order-three twist.
pub fn m3_presentation() -> Presentation {
    Presentation::parse_parts(
        &["x", "y", "u", "z1", "z2", "z3"],
        &[
            "x^2 y^-2",
            "y x y^-1 x",
            "u^3",
            "x z1 x^-1 z1",
            "x z2 x^-1 z1^-1 z3 z1",
            "x z3 x^-1 z1^-1 z2 z1",
            "y z1 y^-1 z1^-1 z3^-1 z2^-1",
            "y z2 y^-1 z2",
            "y z3 y^-1 z2 z3 z2^-1",
            "u z1 u^-1 z1^-1 z3^-1 x^-2",
            "u z2 u^-1 z1 x^-2",
            "u z3 u^-1 z3 z1 z2 x^-2",
            "u x u^-1 y^-1 x^-1",
            "u y u^-1 x^-1",
        ],
    )
    .expect("parses")
}

/// Regular permutation realization of a finite presentation.
pub fn finite_model(p: &Presentation) -> FiniteGroup {
    let t = todd_coxeter(p, &[], &EnumerationLimits::default()).expect("model group closes");
    t.permutation_group()
}

/// Faithful degree-16 model of [`l_presentation`]: points are rank-four bit
/// vectors, the wi translate by basis vectors, t acts linearly with
/// t(e2) = e1, t(e1 + e2) = e2, t(e4) = e3, t(e3 + e4) = e4.
pub fn l_affine_hom() -> PermHom {
    let mut images = Vec::with_capacity(5);
    for i in 0..4 {
        let im = (0..16u32).map(|p| p ^ (1 << i)).collect();
        images.push(Permutation::from_images(im).expect("bijection"));
    }
    let linear = (0..16u32)
        .map(|p| {
            let x = [p & 1, (p >> 1) & 1, (p >> 2) & 1, (p >> 3) & 1];
            (x[0] ^ x[1]) | (x[0] << 1) | ((x[2] ^ x[3]) << 2) | (x[2] << 3)
        })
        .collect();
    images.push(Permutation::from_images(linear).expect("bijection"));
    PermHom::new(l_presentation(), images).expect("five images")
}

/// Generator images of the map from [`lambda_presentation`] onto the
/// order-48 group.
pub fn lambda_to_l() -> FpHom {
    let source = lambda_presentation();
    let target = l_presentation();
    let images = [
        "t",
        "w1 w2 w3 w4 t^2",
        "w1",
        "w3",
        "w1 w3",
        "w1 w2 w3 w4",
        "w2 w4",
    ]
    .iter()
    .map(|s| Word::parse(target.alphabet(), s).expect("parses"))
    .collect();
    FpHom::new(source, target, images).expect("seven images")
}

/// Generator images of the map from the 25-letter subgroup presentation
/// onto the order-48 group, collapsing its third derived subgroup.
pub fn dsb4_to_l() -> FpHom {
    let source = crate::gamma2::dsb4_presentation();
    let target = l_presentation();
    let table: &[(&str, &str)] = &[
        ("A1", "w1 w3"),
        ("A3", "1"),
        ("A4", "w1 w3"),
        ("B1", "1"),
        ("B2", "w1 w3"),
        ("B3", "w1 w3"),
        ("B4", "1"),
        ("C1", "w1 w2 w3 w4"),
        ("C2", "w1 w2 w3 w4"),
        ("C3", "w1 w2 w3 w4"),
        ("C4", "w1 w2 w3 w4"),
        ("D1", "w2 w4"),
        ("D2", "w2 w4"),
        ("D3", "w2 w4"),
        ("D4", "w2 w4"),
        ("X2", "1"),
        ("X4", "1"),
        ("Y1", "t"),
        ("Y2", "t^2"),
        ("Y3", "w1 w2 w3 w4 t^2"),
        ("Y4", "w1 w3 t"),
        ("Z1", "w1"),
        ("Z2", "w1"),
        ("Z3", "w3"),
        ("Z4", "w3"),
    ];
    let mut images = vec![Word::identity(target.alphabet()); source.gen_count()];
    for (name, text) in table {
        let gen = source.alphabet().id(name).expect("known letter");
        images[gen] = Word::parse(target.alphabet(), text).expect("parses");
    }
    FpHom::new(source, target, images).expect("twenty-five images")
}

/// Symmetric-group quotient forgetting both the band crossings' signs and
/// every point generator.
pub fn symmetric_quotient(bg: &BraidGroup) -> PermHom {
    let n = bg.n();
    let mut images = Vec::with_capacity(2 * n - 1);
    for i in 1..n {
        let mut im: Vec<u32> = (0..n as u32).collect();
        im.swap(i - 1, i);
        images.push(Permutation::from_images(im).expect("bijection"));
    }
    for _ in 1..=n {
        images.push(Permutation::identity(n));
    }
    PermHom::new(bg.presentation().clone(), images).expect("images respect the alphabet")
}

/// Degree n+2 quotient tracking the strand permutation and the mod-two
/// point-generator count side by side.
pub fn sym_parity_quotient(bg: &BraidGroup) -> PermHom {
    let n = bg.n();
    let identity: Vec<u32> = (0..(n + 2) as u32).collect();
    let mut images = Vec::with_capacity(2 * n - 1);
    for i in 1..n {
        let mut im = identity.clone();
        im.swap(i - 1, i);
        images.push(Permutation::from_images(im).expect("bijection"));
    }
    let mut flip = identity;
    flip.swap(n, n + 1);
    let flip = Permutation::from_images(flip).expect("bijection");
    for _ in 1..=n {
        images.push(flip.clone());
    }
    PermHom::new(bg.presentation().clone(), images).expect("images respect the alphabet")
}

/// Identification targets with verified realizations.
pub fn named_models() -> Vec<NamedModel> {
    let finite = |name: &str, p: Presentation| NamedModel {
        name: name.to_string(),
        relators: p.relators().to_vec(),
        group: finite_model(&p),
    };
    let l = l_affine_hom();
    let mut models = vec![
        finite("Q8", q8_presentation()),
        finite("Q16", q16_presentation()),
        finite("D12", d12_presentation()),
        finite("Dic12", dic12_presentation()),
        finite("A4", a4_presentation()),
    ];
    models.push(NamedModel {
        name: "L".to_string(),
        relators: l.source.relators().to_vec(),
        group: l.image(),
    });
    models
}

/// Groups addressable by name on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupId {
    Bn(usize),
    Gamma2(usize),
    L,
    Lambda,
    M3,
    Q8,
    Q16,
    D12,
    Dic12,
    A4,
}

impl GroupId {
    pub fn all() -> Vec<GroupId> {
        let mut ids = Vec::new();
        for n in 2..=5 {
            ids.push(GroupId::Bn(n));
        }
        for n in 3..=5 {
            ids.push(GroupId::Gamma2(n));
        }
        ids.extend([
            GroupId::L,
            GroupId::Lambda,
            GroupId::M3,
            GroupId::Q8,
            GroupId::Q16,
            GroupId::D12,
            GroupId::Dic12,
            GroupId::A4,
        ]);
        ids
    }
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupId::Bn(n) => write!(f, "bn:{n}"),
            GroupId::Gamma2(n) => write!(f, "gamma2:{n}"),
            GroupId::L => write!(f, "L"),
            GroupId::Lambda => write!(f, "Lambda"),
            GroupId::M3 => write!(f, "M3"),
            GroupId::Q8 => write!(f, "Q8"),
            GroupId::Q16 => write!(f, "Q16"),
            GroupId::D12 => write!(f, "D12"),
            GroupId::Dic12 => write!(f, "Dic12"),
            GroupId::A4 => write!(f, "A4"),
        }
    }
}

impl FromStr for GroupId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(n) = s.strip_prefix("bn:") {
            let n: usize = n.parse().map_err(|_| format!("bad strand count in {s:?}"))?;
            if (2..=5).contains(&n) {
                return Ok(GroupId::Bn(n));
            }
            return Err(format!("{s:?}: strand count must be 2..=5"));
        }
        if let Some(n) = s.strip_prefix("gamma2:") {
            let n: usize = n.parse().map_err(|_| format!("bad strand count in {s:?}"))?;
            if (3..=5).contains(&n) {
                return Ok(GroupId::Gamma2(n));
            }
            return Err(format!("{s:?}: strand count must be 3..=5"));
        }
        match s {
            "L" => Ok(GroupId::L),
            "Lambda" => Ok(GroupId::Lambda),
            "M3" => Ok(GroupId::M3),
            "Q8" => Ok(GroupId::Q8),
            "Q16" => Ok(GroupId::Q16),
            "D12" => Ok(GroupId::D12),
            "Dic12" => Ok(GroupId::Dic12),
            "A4" => Ok(GroupId::A4),
            other => Err(format!(
                "unknown group {other:?}; known: bn:2..bn:5, gamma2:3..gamma2:5, L, Lambda, M3, Q8, Q16, D12, Dic12, A4"
            )),
        }
    }
}

/// Presentation behind a registry id.
pub fn model_group(id: GroupId) -> Presentation {
    match id {
        GroupId::Bn(n) => braid_presentation(n).expect("registry range"),
        GroupId::Gamma2(n) => gamma2_family_presentation(n).expect("registry range"),
        GroupId::L => l_presentation(),
        GroupId::Lambda => lambda_presentation(),
        GroupId::M3 => m3_presentation(),
        GroupId::Q8 => q8_presentation(),
        GroupId::Q16 => q16_presentation(),
        GroupId::D12 => d12_presentation(),
        GroupId::Dic12 => dic12_presentation(),
        GroupId::A4 => a4_presentation(),
    }
}
