//! Coset enumeration over a finite presentation: HLT-style Todd-Coxeter with
//! union-find coincidence handling, direct kernel tables from permutation
//! images, Schreier transversals, and rewriting into subgroup generators.

use std::collections::{HashMap, HashSet};
use std::io;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::perm::{FiniteGroup, Permutation};
use crate::presentation::PermHom;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
pub struct EnumerationLimits {
    pub max_cosets: usize,
    pub max_deductions: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_cosets: 2_000_000, max_deductions: u64::MAX }
    }
}

impl EnumerationLimits {
    pub fn with_max_cosets(max_cosets: usize) -> Self {
        EnumerationLimits { max_cosets, ..Default::default() }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EnumerationError {
    #[error("coset limit {0} exceeded; the subgroup index may be infinite")]
    Exceeded(usize),
    #[error("deduction limit exceeded")]
    DeductionsExceeded,
    #[error("relator {index} has a nontrivial image, so the map is not a homomorphism")]
    NotAHomomorphism { index: usize },
    #[error("word is not in the subgroup: it moves coset 0 to {0}")]
    NotInSubgroup(u32),
    #[error("transversal rejected: {0}")]
    InvalidTransversal(String),
}

/// Complete right-coset action table. Row `c`, column `Letter::column()`
/// holds the coset `c * letter`. Coset 0 is the subgroup itself; numbering is
/// breadth-first from 0 in column order, so equal subgroups of equal
/// presentations produce identical tables.
#[derive(Debug, Clone)]
pub struct CosetTable {
    alphabet: Arc<Alphabet>,
    n: usize,
    flat: Vec<u32>,
}

impl PartialEq for CosetTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.flat == other.flat
            && self.alphabet.names() == other.alphabet.names()
    }
}
impl Eq for CosetTable {}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn ncols(&self) -> usize {
        2 * self.alphabet.len()
    }

    pub fn apply_column(&self, coset: u32, column: usize) -> u32 {
        self.flat[coset as usize * self.ncols() + column]
    }

    pub fn apply(&self, coset: u32, letter: Letter) -> u32 {
        self.apply_column(coset, letter.column())
    }

    pub fn trace(&self, start: u32, w: &Word) -> u32 {
        w.letters().iter().fold(start, |c, &l| self.apply(c, l))
    }

    /// The permutation a generator induces on the cosets.
    pub fn permutation(&self, gen: usize) -> Permutation {
        let images = (0..self.n as u32).map(|c| self.apply_column(c, 2 * gen)).collect();
        Permutation::from_images(images).expect("complete table columns are bijections")
    }

    pub fn permutation_group(&self) -> FiniteGroup {
        let gens = (0..self.alphabet.len()).map(|g| self.permutation(g)).collect();
        FiniteGroup::new(self.n, gens)
    }

    /// True when every relator fixes every coset.
    pub fn relators_act_trivially(&self, p: &Presentation) -> bool {
        p.relators()
            .iter()
            .all(|r| (0..self.n as u32).all(|c| self.trace(c, r) == c))
    }

    /// Minimal breadth-first coset representatives; prefix-closed, and the
    /// representative of coset 0 is the identity.
    pub fn schreier_transversal(&self) -> Vec<Word> {
        let mut out: Vec<Option<Word>> = vec![None; self.n];
        out[0] = Some(Word::identity(&self.alphabet));
        let mut order = vec![0u32];
        let mut qi = 0;
        while qi < order.len() {
            let c = order[qi];
            qi += 1;
            for x in 0..self.ncols() {
                let d = self.apply_column(c, x);
                if out[d as usize].is_none() {
                    let l = Letter::new(x / 2, x % 2 == 1);
                    let step = Word::from_letters(&self.alphabet, [l]);
                    let w = out[c as usize].as_ref().unwrap().concat(&step).unwrap();
                    out[d as usize] = Some(w);
                    order.push(d);
                }
            }
        }
        out.into_iter().map(|w| w.expect("table is transitive")).collect()
    }

    /// Checks a candidate transversal: every word must trace from coset 0 to
    /// a distinct coset and the word set must be closed under prefixes.
    /// Returns `targets[i]` = the coset word `i` represents.
    pub fn validate_transversal(&self, candidate: &[Word]) -> Result<Vec<u32>, EnumerationError> {
        let fail = |m: String| Err(EnumerationError::InvalidTransversal(m));
        if candidate.len() != self.n {
            return fail(format!("{} words for {} cosets", candidate.len(), self.n));
        }
        let mut targets = Vec::with_capacity(candidate.len());
        let mut seen = vec![false; self.n];
        for w in candidate {
            let c = self.trace(0, w);
            if seen[c as usize] {
                return fail(format!("`{w}` lands in an already covered coset {c}"));
            }
            seen[c as usize] = true;
            targets.push(c);
        }
        let all: HashSet<&[Letter]> = candidate.iter().map(|w| w.letters()).collect();
        for w in candidate {
            for cut in 0..w.len() {
                if !all.contains(&w.letters()[..cut]) {
                    return fail(format!("prefix of `{w}` of length {cut} is missing"));
                }
            }
        }
        Ok(targets)
    }

    /// Reorders a validated transversal so entry `c` represents coset `c`.
    pub fn index_transversal(&self, candidate: &[Word]) -> Result<Vec<Word>, EnumerationError> {
        let targets = self.validate_transversal(candidate)?;
        let mut out = vec![Word::identity(&self.alphabet); self.n];
        for (w, &c) in candidate.iter().zip(&targets) {
            out[c as usize] = w.clone();
        }
        Ok(out)
    }
}

/// Builds the coset table of the subgroup generated by `subgroup_gens`.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[Word],
    limits: &EnumerationLimits,
) -> Result<CosetTable, EnumerationError> {
    let ncols = 2 * p.gen_count();
    let mut e = Enumerator::new(ncols, *limits)?;
    let cols = |w: &Word| -> Vec<usize> { w.letters().iter().map(|l| l.column()).collect() };
    let subcols: Vec<Vec<usize>> = subgroup_gens.iter().map(cols).collect();
    let relcols: Vec<Vec<usize>> = p.relators().iter().map(cols).collect();

    // Coset 0 is the subgroup: its generators fix it. Coset 0 is never
    // merged away since merges keep the smaller index.
    for w in &subcols {
        e.scan_and_fill(0, w)?;
    }
    let mut c: u32 = 0;
    while (c as usize) < e.parent.len() {
        if e.is_alive(c) {
            for r in &relcols {
                e.scan_and_fill(c, r)?;
                if !e.is_alive(c) {
                    break;
                }
            }
        }
        if e.is_alive(c) {
            for x in 0..ncols {
                if e.get(c, x) == UNDEF {
                    let nc = e.new_coset()?;
                    e.record(c, x, nc)?;
                }
            }
        }
        c += 1;
    }
    Ok(e.finish(p.alphabet()))
}

/// Builds the coset table of the kernel of a map onto a finite permutation
/// group directly: cosets are the image elements in breadth-first order.
pub fn kernel_coset_table(h: &PermHom) -> Result<CosetTable, EnumerationError> {
    if let Some(index) = h.relator_verdicts().iter().position(|ok| !ok) {
        return Err(EnumerationError::NotAHomomorphism { index });
    }
    let p = &h.source;
    let g = p.gen_count();
    let mut colperm = Vec::with_capacity(2 * g);
    for i in 0..g {
        colperm.push(h.images[i].clone());
        colperm.push(h.images[i].inverse());
    }
    let degree = colperm.first().map_or(1, Permutation::degree);
    let identity = Permutation::identity(degree);
    let mut ids: HashMap<Permutation, u32> = HashMap::new();
    ids.insert(identity.clone(), 0);
    let mut elems = vec![identity];
    let mut flat = Vec::new();
    let mut qi = 0;
    while qi < elems.len() {
        let cur = elems[qi].clone();
        qi += 1;
        for cp in &colperm {
            let next = cur.mul(cp);
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = elems.len() as u32;
                    ids.insert(next.clone(), id);
                    elems.push(next);
                    id
                }
            };
            flat.push(id);
        }
    }
    Ok(CosetTable { alphabet: Arc::clone(p.alphabet()), n: elems.len(), flat })
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    alive: usize,
    limits: EnumerationLimits,
    deductions: u64,
}

impl Enumerator {
    fn new(ncols: usize, limits: EnumerationLimits) -> Result<Self, EnumerationError> {
        let mut e = Enumerator {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            queue: Vec::new(),
            alive: 0,
            limits,
            deductions: 0,
        };
        e.new_coset()?;
        Ok(e)
    }

    fn new_coset(&mut self) -> Result<u32, EnumerationError> {
        let id = self.parent.len();
        if id >= self.limits.max_cosets {
            return Err(EnumerationError::Exceeded(self.limits.max_cosets));
        }
        self.parent.push(id as u32);
        self.table.extend(std::iter::repeat(UNDEF).take(self.ncols));
        self.alive += 1;
        Ok(id as u32)
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.ncols + x] = v;
    }

    /// Records the deduction c*x = v together with its mirror v*x^-1 = c.
    fn record(&mut self, c: u32, x: usize, v: u32) -> Result<(), EnumerationError> {
        self.deductions += 1;
        if self.deductions > self.limits.max_deductions {
            return Err(EnumerationError::DeductionsExceeded);
        }
        self.set(c, x, v);
        self.set(v, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn is_alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn merge(&mut self, a: u32, b: u32) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        self.alive -= 1;
        self.queue.push(hi);
    }

    /// Merges two cosets and transfers every table entry of each dead coset
    /// onto its surviving representative, cascading further merges.
    fn coincidence(&mut self, a: u32, b: u32) -> Result<(), EnumerationError> {
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let gamma = self.queue[qi];
            qi += 1;
            let row: Vec<u32> = (0..self.ncols).map(|x| self.get(gamma, x)).collect();
            for (x, &delta) in row.iter().enumerate() {
                if delta == UNDEF {
                    continue;
                }
                // Drop the mirror entry only while it still points at the
                // dead coset; entries already redirected to a survivor stay.
                if self.get(delta, x ^ 1) == gamma {
                    self.set(delta, x ^ 1, UNDEF);
                }
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                let tmx = self.get(mu, x);
                if tmx != UNDEF {
                    self.merge(nu, tmx);
                } else {
                    let tnix = self.get(nu, x ^ 1);
                    if tnix != UNDEF {
                        self.merge(mu, tnix);
                    } else {
                        self.record(mu, x, nu)?;
                    }
                }
            }
        }
        self.queue.clear();
        Ok(())
    }

    /// Traces `cols` from `start` forward and backward, defining cosets to
    /// close any gap of length two or more, recording the deduction for a
    /// gap of one, and merging when the scans disagree.
    fn scan_and_fill(&mut self, start: u32, cols: &[usize]) -> Result<(), EnumerationError> {
        let mut i: isize = 0;
        let mut j: isize = cols.len() as isize - 1;
        let mut f = start;
        let mut b = start;
        loop {
            while i <= j {
                let t = self.get(f, cols[i as usize]);
                if t == UNDEF {
                    break;
                }
                f = t;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b)?;
                }
                return Ok(());
            }
            while j >= i {
                let t = self.get(b, cols[j as usize] ^ 1);
                if t == UNDEF {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b)?;
                return Ok(());
            }
            if j == i {
                return self.record(f, cols[i as usize], b);
            }
            let nc = self.new_coset()?;
            self.record(f, cols[i as usize], nc)?;
        }
    }

    /// Compresses out dead cosets and renumbers breadth-first from coset 0
    /// in column order.
    fn finish(mut self, alphabet: &Arc<Alphabet>) -> CosetTable {
        let total = self.parent.len();
        let mut newid = vec![UNDEF; total];
        newid[0] = 0;
        let mut order = vec![0u32];
        let mut qi = 0;
        while qi < order.len() {
            let c = order[qi];
            qi += 1;
            for x in 0..self.ncols {
                let raw = self.get(c, x);
                assert_ne!(raw, UNDEF, "enumeration left an incomplete row");
                let d = self.rep(raw);
                if newid[d as usize] == UNDEF {
                    newid[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        assert_eq!(order.len(), self.alive, "live cosets must all be reachable");
        let mut flat = vec![UNDEF; order.len() * self.ncols];
        for (new_c, &old_c) in order.iter().enumerate() {
            for x in 0..self.ncols {
                let d = self.rep(self.get(old_c, x));
                flat[new_c * self.ncols + x] = newid[d as usize];
            }
        }
        CosetTable { alphabet: Arc::clone(alphabet), n: order.len(), flat }
    }
}

/// Schreier generators of a finite-index subgroup: one candidate per
/// (coset, ambient generator) pair, with the ones whose expansion
/// `t_c * g * t_{c*g}^-1` freely reduces to the identity deleted.
#[derive(Debug, Clone)]
pub struct SchreierGenerators {
    alphabet: Arc<Alphabet>,
    expansions: Vec<Word>,
    index: Vec<Option<usize>>,
    n_cosets: usize,
}

impl SchreierGenerators {
    /// `transversal` must be indexed by coset (see `index_transversal`).
    pub fn new(
        ambient: &Presentation,
        t: &CosetTable,
        transversal: &[Word],
    ) -> Result<Self, EnumerationError> {
        let targets = t.validate_transversal(transversal)?;
        if targets.iter().enumerate().any(|(i, &c)| i as u32 != c) {
            return Err(EnumerationError::InvalidTransversal(
                "transversal words must be indexed by coset".into(),
            ));
        }
        let g = ambient.gen_count();
        let mut names = Vec::new();
        let mut expansions = Vec::new();
        let mut index = vec![None; t.n_cosets() * g];
        for gen in 0..g {
            for c in 0..t.n_cosets() as u32 {
                let d = t.apply_column(c, 2 * gen);
                let e = Word::product(
                    ambient.alphabet(),
                    [
                        &transversal[c as usize],
                        &Word::gen(ambient.alphabet(), gen),
                        &transversal[d as usize].inverse(),
                    ],
                )
                .expect("transversal shares the ambient alphabet");
                if !e.is_empty() {
                    index[c as usize * g + gen] = Some(names.len());
                    names.push(format!("{}@{}", ambient.alphabet().name(gen), c));
                    expansions.push(e);
                }
            }
        }
        let alphabet = Alphabet::new(names).expect("generated names are unique");
        Ok(SchreierGenerators { alphabet, expansions, index, n_cosets: t.n_cosets() })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn count(&self) -> usize {
        self.expansions.len()
    }

    /// Ambient word each subgroup generator expands to.
    pub fn expansions(&self) -> &[Word] {
        &self.expansions
    }

    pub fn generator_id(&self, coset: u32, ambient_gen: usize) -> Option<usize> {
        let g = self.index.len() / self.n_cosets;
        self.index[coset as usize * g + ambient_gen]
    }

    /// Scans `w` through the table from `start`, emitting one subgroup
    /// letter per non-tree edge. Returns the rewritten word and the coset
    /// where the scan ends.
    pub fn rewrite_from(&self, t: &CosetTable, start: u32, w: &Word) -> (Word, u32) {
        let mut c = start;
        let mut letters = Vec::new();
        for l in w.letters() {
            if !l.inv {
                if let Some(id) = self.generator_id(c, l.gen) {
                    letters.push(Letter::new(id, false));
                }
                c = t.apply(c, *l);
            } else {
                let back = t.apply(c, *l);
                if let Some(id) = self.generator_id(back, l.gen) {
                    letters.push(Letter::new(id, true));
                }
                c = back;
            }
        }
        (Word::from_letters(&self.alphabet, letters), c)
    }

    /// Rewrites a word of the subgroup over the subgroup generators.
    pub fn rewrite(&self, t: &CosetTable, w: &Word) -> Result<Word, EnumerationError> {
        let (out, end) = self.rewrite_from(t, 0, w);
        if end != 0 {
            return Err(EnumerationError::NotInSubgroup(end));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    schema_version: u32,
    presentation_hash: String,
    subgroup_hash: String,
    n_cosets: usize,
    action: Vec<u32>,
}

const CACHE_SCHEMA_VERSION: u32 = 1;

fn hash_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    format!("{:x}", h.finalize())
}

fn cache_hashes(p: &Presentation, subgroup_gens: &[Word]) -> (String, String) {
    let sub: String = subgroup_gens.iter().map(|w| format!("{w}\n")).collect();
    (hash_hex(&p.to_text()), hash_hex(&sub))
}

fn cache_path(dir: &Path, p_hash: &str, s_hash: &str) -> std::path::PathBuf {
    dir.join(format!("tc-{}-{}.json", &p_hash[..16], &s_hash[..16]))
}

/// Loads a previously stored table, re-validating it against the
/// presentation before trusting it.
pub fn load_cached_table(
    dir: &Path,
    p: &Presentation,
    subgroup_gens: &[Word],
) -> Option<CosetTable> {
    let (ph, sh) = cache_hashes(p, subgroup_gens);
    let text = std::fs::read_to_string(cache_path(dir, &ph, &sh)).ok()?;
    let rec: CacheRecord = serde_json::from_str(&text).ok()?;
    if rec.schema_version != CACHE_SCHEMA_VERSION
        || rec.presentation_hash != ph
        || rec.subgroup_hash != sh
    {
        return None;
    }
    let ncols = 2 * p.gen_count();
    if rec.action.len() != rec.n_cosets * ncols
        || rec.action.iter().any(|&v| v as usize >= rec.n_cosets)
    {
        return None;
    }
    let t = CosetTable {
        alphabet: Arc::clone(p.alphabet()),
        n: rec.n_cosets,
        flat: rec.action,
    };
    let consistent = t.relators_act_trivially(p)
        && subgroup_gens.iter().all(|w| t.trace(0, w) == 0)
        && (0..p.gen_count()).all(|g| {
            (0..t.n as u32).all(|c| {
                let d = t.apply_column(c, 2 * g);
                t.apply_column(d, 2 * g + 1) == c
            })
        });
    consistent.then_some(t)
}

/// Stores a table as JSON, writing to a temporary file and renaming so a
/// concurrent reader never sees a partial file.
pub fn store_cached_table(
    dir: &Path,
    p: &Presentation,
    subgroup_gens: &[Word],
    t: &CosetTable,
) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let (ph, sh) = cache_hashes(p, subgroup_gens);
    let rec = CacheRecord {
        schema_version: CACHE_SCHEMA_VERSION,
        presentation_hash: ph.clone(),
        subgroup_hash: sh.clone(),
        n_cosets: t.n,
        action: t.flat.clone(),
    };
    let path = cache_path(dir, &ph, &sh);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&rec)?)?;
    std::fs::rename(&tmp, &path)
}

/// Todd-Coxeter with a read-through cache.
pub fn todd_coxeter_cached(
    cache_dir: Option<&Path>,
    p: &Presentation,
    subgroup_gens: &[Word],
    limits: &EnumerationLimits,
) -> Result<CosetTable, EnumerationError> {
    if let Some(dir) = cache_dir {
        if let Some(t) = load_cached_table(dir, p, subgroup_gens) {
            return Ok(t);
        }
    }
    let t = todd_coxeter(p, subgroup_gens, limits)?;
    if let Some(dir) = cache_dir {
        let _ = store_cached_table(dir, p, subgroup_gens, &t);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(p: &Presentation, texts: &[&str]) -> Vec<Word> {
        texts.iter().map(|t| Word::parse(p.alphabet(), t).unwrap()).collect()
    }

    #[test]
    fn cyclic_group_regular_table() {
        let p = Presentation::parse_parts(&["x"], &["x^6"]).unwrap();
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 6);
        assert!(t.relators_act_trivially(&p));
        let x = t.permutation(0);
        assert_eq!(x.order(), 6);
    }

    #[test]
    fn symmetric_group_and_point_stabilizer() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 6);
        assert_eq!(t.permutation_group().order(), 6);

        let sub = words(&p, &["a"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 3);
        assert!(t.relators_act_trivially(&p));
        assert_eq!(t.trace(0, &sub[0]), 0);
    }

    #[test]
    fn quaternion_order_eight() {
        let p =
            Presentation::parse_parts(&["x", "y"], &["x^2 y^-2", "y x y^-1 x"]).unwrap();
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 8);
    }

    #[test]
    fn coincidences_collapse_to_full_group() {
        let p = Presentation::parse_parts(&["x"], &["x^6"]).unwrap();
        let sub = words(&p, &["x^4", "x^5"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 1);
    }

    #[test]
    fn free_group_exceeds_limits() {
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let e = todd_coxeter(&p, &[], &EnumerationLimits::with_max_cosets(100));
        assert!(matches!(e, Err(EnumerationError::Exceeded(100))));
    }

    #[test]
    fn kernel_table_matches_enumeration() {
        // F2 onto Z2: a swaps, b fixed. Kernel has index 2 and generators
        // a^2, b, a b a^-1.
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let h = PermHom::new(
            p.clone(),
            vec![
                Permutation::from_cycles(2, &[&[0, 1]]),
                Permutation::identity(2),
            ],
        )
        .unwrap();
        let kt = kernel_coset_table(&h).unwrap();
        assert_eq!(kt.n_cosets(), 2);
        let sub = words(&p, &["a^2", "b", "a b a^-1"]);
        let tc = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        assert_eq!(kt, tc);
    }

    #[test]
    fn kernel_table_rejects_non_homomorphism() {
        let p = Presentation::parse_parts(&["a"], &["a^3"]).unwrap();
        let h = PermHom::new(p, vec![Permutation::from_cycles(2, &[&[0, 1]])]).unwrap();
        assert!(matches!(
            kernel_coset_table(&h),
            Err(EnumerationError::NotAHomomorphism { index: 0 })
        ));
    }

    #[test]
    fn transversal_is_prefix_closed_and_minimal() {
        let p = Presentation::parse_parts(&["a", "b"], &["a^2", "b^2", "a b a b a b"]).unwrap();
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        let trans = t.schreier_transversal();
        assert_eq!(trans.len(), 6);
        assert!(trans[0].is_empty());
        let targets = t.validate_transversal(&trans).unwrap();
        assert_eq!(targets, (0..6).collect::<Vec<u32>>());

        let mut bad = trans.clone();
        bad[5] = bad[4].clone();
        assert!(t.validate_transversal(&bad).is_err());

        // A word set covering all cosets but not prefix-closed.
        let mut unclosed = trans;
        let far = unclosed[5].clone();
        unclosed[5] =
            Word::parse(p.alphabet(), "a a b").unwrap().concat(&far.inverse()).unwrap().inverse();
        if t.validate_transversal(&unclosed).is_ok() {
            // The rebuilt word may still be fine; force a genuinely
            // unreachable shape instead.
            unclosed[5] = Word::parse(p.alphabet(), "b a b a b a b a b").unwrap();
            let c = t.trace(0, &unclosed[5]);
            let covered: Vec<u32> =
                unclosed[..5].iter().map(|w| t.trace(0, w)).collect();
            if !covered.contains(&c) {
                assert!(t.validate_transversal(&unclosed).is_err());
            }
        }
    }

    #[test]
    fn schreier_rewriting_roundtrip() {
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let sub = words(&p, &["a^2", "b", "a b a^-1"]);
        let t = todd_coxeter(&p, &sub, &EnumerationLimits::default()).unwrap();
        let trans = t.schreier_transversal();
        let sg = SchreierGenerators::new(&p, &t, &trans).unwrap();
        // Index 2 in a free group of rank 2: Nielsen-Schreier rank 3.
        assert_eq!(sg.count(), 3);

        for w in &sub {
            let rewritten = sg.rewrite(&t, w).unwrap();
            // Expanding the rewritten word must recover the original as a
            // free word.
            let expanded: Word = rewritten
                .letters()
                .iter()
                .map(|l| {
                    let e = &sg.expansions()[l.gen];
                    if l.inv {
                        e.inverse()
                    } else {
                        e.clone()
                    }
                })
                .fold(Word::identity(p.alphabet()), |acc, w| acc.concat(&w).unwrap());
            assert_eq!(&expanded, w);
        }

        let outside = Word::parse(p.alphabet(), "a").unwrap();
        assert!(matches!(
            sg.rewrite(&t, &outside),
            Err(EnumerationError::NotInSubgroup(1))
        ));
    }

    #[test]
    fn cache_roundtrip_and_validation() {
        let dir = std::env::temp_dir().join(format!("fpgroup-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let p = Presentation::parse_parts(&["x"], &["x^6"]).unwrap();
        let t = todd_coxeter_cached(Some(&dir), &p, &[], &EnumerationLimits::default()).unwrap();
        let reloaded = load_cached_table(&dir, &p, &[]).unwrap();
        assert_eq!(t, reloaded);
        // A different presentation must not hit the same entry.
        let q = Presentation::parse_parts(&["x"], &["x^5"]).unwrap();
        assert!(load_cached_table(&dir, &q, &[]).is_none());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
