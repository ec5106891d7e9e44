//! Shared, lazily computed state for the claim runner: coset tables,
//! derived series, quotient groups, and word-problem contexts are built at
//! most once per run and shared across worker threads.

use std::path::PathBuf;
use std::sync::OnceLock;

use fpgroup::coset::{
    todd_coxeter_cached, CosetTable, EnumerationError, EnumerationLimits,
};
use fpgroup::kb::KbCaps;
use fpgroup::perm::{FiniteGroup, NamedModel};
use fpgroup::presentation::PermHom;
use fpgroup::rs::SubgroupPresentation;
use fpgroup::wp::WordProblem;
use fpgroup::Presentation;

use crate::braid::BraidGroup;
use crate::gamma2::{dsb4_presentation, gamma2_subgroup, klein_quotient};
use crate::gensk::{gensk_membership_check, MembershipReport};
use crate::models::{lambda_presentation, m3_presentation, named_models, symmetric_quotient};
use crate::modtwo::{mod_two_kernel_check, KernelBasisReport};
use crate::series::{derived_series, stage_quotient, SeriesError, SeriesStage};

/// Tunable knobs shared by every claim in one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_cosets: usize,
    pub kb_max_rules: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_cosets: EnumerationLimits::default().max_cosets,
            kb_max_rules: KbCaps::default().max_rules,
            cache_dir: None,
        }
    }
}

impl RunConfig {
    pub fn limits(&self) -> EnumerationLimits {
        EnumerationLimits::with_max_cosets(self.max_cosets)
    }

    pub fn kb_caps(&self) -> KbCaps {
        KbCaps { max_rules: self.kb_max_rules, ..KbCaps::default() }
    }
}

/// Why a shared computation is unavailable: a configured limit stopped it,
/// or it genuinely failed.
#[derive(Debug, Clone)]
pub enum SharedError {
    Undecided(String),
    Failed(String),
}

impl SharedError {
    fn from_enumeration(e: &EnumerationError) -> SharedError {
        match e {
            EnumerationError::Exceeded(n) => {
                SharedError::Undecided(format!("enumeration exceeded {n} cosets"))
            }
            EnumerationError::DeductionsExceeded => {
                SharedError::Undecided("deduction budget exhausted".to_string())
            }
            other => SharedError::Failed(other.to_string()),
        }
    }
}

impl From<EnumerationError> for SharedError {
    fn from(e: EnumerationError) -> Self {
        SharedError::from_enumeration(&e)
    }
}

impl From<SeriesError> for SharedError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Enumeration(inner) => SharedError::from_enumeration(&inner),
            SeriesError::AbelianizationTooLarge { depth } => SharedError::Undecided(format!(
                "abelianization at depth {depth} exceeds the coset budget"
            )),
            other => SharedError::Failed(other.to_string()),
        }
    }
}

pub type Shared<'a, T> = Result<&'a T, SharedError>;

/// Derived-series chains the registry knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKey {
    B2,
    B3,
    B4,
    M3,
    Dsb4,
}

impl SeriesKey {
    fn index(self) -> usize {
        match self {
            SeriesKey::B2 => 0,
            SeriesKey::B3 => 1,
            SeriesKey::B4 => 2,
            SeriesKey::M3 => 3,
            SeriesKey::Dsb4 => 4,
        }
    }

    fn depth(self) -> usize {
        match self {
            SeriesKey::B2 | SeriesKey::M3 | SeriesKey::Dsb4 => 2,
            SeriesKey::B3 | SeriesKey::B4 => 3,
        }
    }
}

/// Finite quotients reached through a derived-series stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKey {
    B3Depth2,
    B3Depth3,
    B4Depth2,
    B4Depth3,
    Dsb4Depth2,
}

impl QuotientKey {
    fn index(self) -> usize {
        match self {
            QuotientKey::B3Depth2 => 0,
            QuotientKey::B3Depth3 => 1,
            QuotientKey::B4Depth2 => 2,
            QuotientKey::B4Depth3 => 3,
            QuotientKey::Dsb4Depth2 => 4,
        }
    }

    fn parts(self) -> (SeriesKey, usize) {
        match self {
            QuotientKey::B3Depth2 => (SeriesKey::B3, 2),
            QuotientKey::B3Depth3 => (SeriesKey::B3, 3),
            QuotientKey::B4Depth2 => (SeriesKey::B4, 2),
            QuotientKey::B4Depth3 => (SeriesKey::B4, 3),
            QuotientKey::Dsb4Depth2 => (SeriesKey::Dsb4, 2),
        }
    }
}

/// Coset budget for the open-ended enumeration of the seven-generator
/// presentation; kept below the general budget because the group is not
/// expected to close.
pub const LAMBDA_COSET_CAP: usize = 500_000;

#[derive(Default)]
pub struct Registry {
    config: RunConfig,
    braids: [OnceLock<BraidGroup>; 5],
    series: [OnceLock<Result<Vec<SeriesStage>, SharedError>>; 5],
    quotients: [OnceLock<Result<(CosetTable, FiniteGroup), SharedError>>; 5],
    b2_table: OnceLock<Result<CosetTable, SharedError>>,
    b2_group: OnceLock<Result<FiniteGroup, SharedError>>,
    b3_quotient_homs: OnceLock<Result<Vec<(String, PermHom)>, SharedError>>,
    b3_word_problem: OnceLock<Result<WordProblem, SharedError>>,
    gamma2_subs: [OnceLock<Result<(CosetTable, SubgroupPresentation), SharedError>>; 3],
    models: OnceLock<Vec<NamedModel>>,
    kernel_basis: OnceLock<Result<KernelBasisReport, SharedError>>,
    gensk: OnceLock<Result<MembershipReport, SharedError>>,
    lambda: OnceLock<Result<CosetTable, SharedError>>,
}

impl Registry {
    pub fn new(config: RunConfig) -> Self {
        Registry { config, ..Registry::default() }
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    /// The n-strand group, n in 1..=5.
    pub fn braid(&self, n: usize) -> &BraidGroup {
        assert!((1..=5).contains(&n), "registry covers one to five strands");
        self.braids[n - 1].get_or_init(|| BraidGroup::new(n).expect("strand count"))
    }

    pub fn series_presentation(&self, key: SeriesKey) -> Presentation {
        match key {
            SeriesKey::B2 => self.braid(2).presentation().clone(),
            SeriesKey::B3 => self.braid(3).presentation().clone(),
            SeriesKey::B4 => self.braid(4).presentation().clone(),
            SeriesKey::M3 => m3_presentation(),
            SeriesKey::Dsb4 => dsb4_presentation(),
        }
    }

    pub fn series(&self, key: SeriesKey) -> Shared<'_, Vec<SeriesStage>> {
        self.series[key.index()]
            .get_or_init(|| {
                let p = self.series_presentation(key);
                derived_series(&p, key.depth(), &self.config.limits()).map_err(SharedError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn quotient(&self, key: QuotientKey) -> Shared<'_, (CosetTable, FiniteGroup)> {
        self.quotients[key.index()]
            .get_or_init(|| {
                let (series_key, depth) = key.parts();
                let stages = self.series(series_key)?;
                let p = self.series_presentation(series_key);
                stage_quotient(&p, &stages[depth], &self.config.limits())
                    .map_err(SharedError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Coset table of the trivial subgroup of the two-strand group.
    pub fn b2_table(&self) -> Shared<'_, CosetTable> {
        self.b2_table
            .get_or_init(|| {
                let bg = self.braid(2);
                todd_coxeter_cached(
                    self.config.cache_dir.as_deref(),
                    bg.presentation(),
                    &[],
                    &self.config.limits(),
                )
                .map_err(SharedError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The two-strand group as a permutation group on its own elements.
    pub fn b2_group(&self) -> Shared<'_, FiniteGroup> {
        self.b2_group
            .get_or_init(|| Ok(self.b2_table()?.permutation_group()))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The finite quotients registered on the three-strand word problem,
    /// with their names.
    pub fn b3_quotient_homs(&self) -> Shared<'_, Vec<(String, PermHom)>> {
        self.b3_quotient_homs
            .get_or_init(|| {
                let bg = self.braid(3);
                let table_hom = |t: &CosetTable| {
                    let images = (0..bg.presentation().gen_count())
                        .map(|g| t.permutation(g))
                        .collect();
                    PermHom::new(bg.presentation().clone(), images)
                        .map_err(|e| SharedError::Failed(e.to_string()))
                };
                let (t12, _) = self.quotient(QuotientKey::B3Depth2)?;
                let (t192, _) = self.quotient(QuotientKey::B3Depth3)?;
                Ok(vec![
                    ("mod2-pair".to_string(), klein_quotient(bg)),
                    ("strand-sym".to_string(), symmetric_quotient(bg)),
                    ("coset-12".to_string(), table_hom(t12)?),
                    ("coset-192".to_string(), table_hom(t192)?),
                ])
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Word problem for the three-strand group with all registry quotients
    /// registered.
    pub fn b3_word_problem(&self) -> Shared<'_, WordProblem> {
        self.b3_word_problem
            .get_or_init(|| {
                let bg = self.braid(3);
                let mut wp = WordProblem::new(bg.presentation().clone(), &self.config.kb_caps());
                for (name, hom) in self.b3_quotient_homs()? {
                    wp.register_quotient(name.clone(), hom.clone());
                }
                Ok(wp)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Kernel coset table and rewritten subgroup presentation of the
    /// commutator subgroup of the n-strand group, n in 3..=5.
    pub fn gamma2_sub(&self, n: usize) -> Shared<'_, (CosetTable, SubgroupPresentation)> {
        assert!((3..=5).contains(&n), "registry covers three to five strands");
        self.gamma2_subs[n - 3]
            .get_or_init(|| gamma2_subgroup(self.braid(n)).map_err(SharedError::from))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn models(&self) -> &[NamedModel] {
        self.models.get_or_init(named_models)
    }

    pub fn kernel_basis(&self) -> Shared<'_, KernelBasisReport> {
        self.kernel_basis
            .get_or_init(|| mod_two_kernel_check().map_err(SharedError::from))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn gensk(&self) -> Shared<'_, MembershipReport> {
        self.gensk
            .get_or_init(|| {
                gensk_membership_check(&self.config.limits()).map_err(SharedError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Open-ended enumeration of the seven-generator presentation against
    /// the trivial subgroup; expected to hit the cap rather than close.
    pub fn lambda_table(&self) -> Shared<'_, CosetTable> {
        self.lambda
            .get_or_init(|| {
                let cap = self.config.max_cosets.min(LAMBDA_COSET_CAP);
                todd_coxeter_cached(
                    self.config.cache_dir.as_deref(),
                    &lambda_presentation(),
                    &[],
                    &EnumerationLimits::with_max_cosets(cap),
                )
                .map_err(SharedError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Every coset table the registry can produce under the current
    /// configuration, with the presentation each one was built from.
    pub fn tables_for_audit(&self) -> Vec<(String, Presentation, &CosetTable)> {
        let mut out: Vec<(String, Presentation, &CosetTable)> = Vec::new();
        if let Ok(t) = self.b2_table() {
            out.push(("two-strand full table".to_string(), self.braid(2).presentation().clone(), t));
        }
        let quotients = [
            (QuotientKey::B3Depth2, "three-strand depth-two quotient"),
            (QuotientKey::B3Depth3, "three-strand depth-three quotient"),
            (QuotientKey::B4Depth2, "four-strand depth-two quotient"),
            (QuotientKey::B4Depth3, "four-strand depth-three quotient"),
            (QuotientKey::Dsb4Depth2, "commutator-subgroup depth-two quotient"),
        ];
        for (key, name) in quotients {
            if let Ok((t, _)) = self.quotient(key) {
                let (series_key, _) = key.parts();
                out.push((name.to_string(), self.series_presentation(series_key), t));
            }
        }
        for n in 3..=5 {
            if let Ok((t, _)) = self.gamma2_sub(n) {
                out.push((
                    format!("{n}-strand commutator-subgroup kernel"),
                    self.braid(n).presentation().clone(),
                    t,
                ));
            }
        }
        if let Ok(t) = self.lambda_table() {
            out.push(("seven-generator enumeration".to_string(), lambda_presentation(), t));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_shareable_across_threads() {
        fn assert_sync<T: Sync>() {}
        assert_sync::<Registry>();
    }

    #[test]
    fn config_defaults_match_component_defaults() {
        let c = RunConfig::default();
        assert_eq!(c.max_cosets, 2_000_000);
        assert_eq!(c.kb_max_rules, 5000);
        assert!(c.cache_dir.is_none());
    }

    #[test]
    fn shared_state_is_computed_once_and_reused() {
        let reg = Registry::new(RunConfig::default());
        let first = reg.b2_table().unwrap() as *const CosetTable;
        let second = reg.b2_table().unwrap() as *const CosetTable;
        assert_eq!(first, second);
        assert_eq!(reg.b2_group().unwrap().order(), 16);
    }

    #[test]
    fn limit_errors_are_reported_as_undecided() {
        let reg = Registry::new(RunConfig { max_cosets: 3, ..RunConfig::default() });
        match reg.b2_table() {
            Err(SharedError::Undecided(msg)) => assert!(msg.contains("exceeded")),
            other => panic!("expected an undecided budget error, got {other:?}"),
        }
    }
}
