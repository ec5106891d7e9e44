//! Permutation groups given by generators: element enumeration, structural
//! invariants, fingerprints, and isomorphism identification against models.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::word::Word;

/// Permutation of `0..degree`, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("degree mismatch")]
    DegreeMismatch,
    #[error("group order exceeds enumeration cap {0}")]
    TooLarge(usize),
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { map: (0..degree as u32).collect() }
    }

    pub fn from_images(map: Vec<u32>) -> Result<Self, PermError> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            let i = v as usize;
            if i >= map.len() || seen[i] {
                return Err(PermError::NotAPermutation(format!("image list {map:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { map })
    }

    /// Cycle constructor: `from_cycles(5, &[&[0,1]])` is the transposition (0 1).
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Self {
        let mut map: Vec<u32> = (0..degree as u32).collect();
        for cyc in cycles {
            for k in 0..cyc.len() {
                map[cyc[k] as usize] = cyc[(k + 1) % cyc.len()];
            }
        }
        Permutation::from_images(map).expect("cycles define a permutation")
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point] as usize
    }

    /// `(self * other)(x) = other(self(x))`: products act left to right, so
    /// evaluating a word multiplies images in reading order.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { map: self.map.iter().map(|&v| other.map[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u32; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u32;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.map.len()];
        let mut ord = 1u64;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Direct sum acting on the disjoint union of the two domains.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let d = self.degree() as u32;
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|&v| v + d));
        Permutation { map }
    }
}

/// Evaluates a word at generator images (index = generator id).
pub fn evaluate_word(w: &Word, images: &[Permutation]) -> Permutation {
    let degree = images.first().map_or(0, Permutation::degree);
    let mut out = Permutation::identity(degree);
    for l in w.letters() {
        let img = &images[l.gen];
        out = if l.inv { out.mul(&img.inverse()) } else { out.mul(img) };
    }
    out
}

/// Cap on explicit element enumeration.
pub const ENUMERATION_CAP: usize = 100_000;

/// Finite permutation group with cached structural data.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    gens: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl FiniteGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Self {
        assert!(gens.iter().all(|g| g.degree() == degree));
        FiniteGroup { degree, gens, elements: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> Self {
        FiniteGroup::new(degree, vec![])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// All elements in breadth-first order from the identity. Panics if the
    /// group exceeds [`ENUMERATION_CAP`]; use [`try_elements`] to handle that.
    pub fn elements(&self) -> &[Permutation] {
        self.try_elements().expect("group order exceeds enumeration cap")
    }

    pub fn try_elements(&self) -> Result<&[Permutation], PermError> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let mut seen = HashSet::new();
        let mut order: Vec<Permutation> = Vec::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.clone());
        order.push(id);
        let mut head = 0;
        while head < order.len() {
            let cur = order[head].clone();
            head += 1;
            for g in &self.gens {
                let next = cur.mul(g);
                if seen.insert(next.clone()) {
                    if order.len() >= ENUMERATION_CAP {
                        return Err(PermError::TooLarge(ENUMERATION_CAP));
                    }
                    order.push(next);
                }
            }
        }
        Ok(self.elements.get_or_init(|| order))
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements().contains(p)
    }

    /// Multiset of element orders.
    pub fn element_order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for e in self.elements() {
            *h.entry(e.order()).or_insert(0) += 1;
        }
        h
    }

    /// Multiset of conjugacy class sizes.
    pub fn conjugacy_class_sizes(&self) -> BTreeMap<usize, usize> {
        let elems = self.elements();
        let index: HashMap<&Permutation, usize> = elems.iter().zip(0..).collect();
        let mut assigned = vec![false; elems.len()];
        let mut sizes = BTreeMap::new();
        for i in 0..elems.len() {
            if assigned[i] {
                continue;
            }
            // Orbit of elems[i] under conjugation by generators.
            let mut orbit = vec![i];
            assigned[i] = true;
            let mut head = 0;
            while head < orbit.len() {
                let cur = elems[orbit[head]].clone();
                head += 1;
                for g in &self.gens {
                    let conj = g.inverse().mul(&cur).mul(g);
                    let j = index[&conj];
                    if !assigned[j] {
                        assigned[j] = true;
                        orbit.push(j);
                    }
                }
            }
            *sizes.entry(orbit.len()).or_insert(0) += 1;
        }
        sizes
    }

    pub fn center_order(&self) -> usize {
        self.elements()
            .iter()
            .filter(|e| self.gens.iter().all(|g| e.mul(g) == g.mul(e)))
            .count()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, g)| self.gens[i + 1..].iter().all(|h| g.mul(h) == h.mul(g)))
    }

    /// Derived subgroup, generated by all commutators of element pairs.
    pub fn derived_subgroup(&self) -> FiniteGroup {
        let elems = self.elements();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for a in elems {
            for b in elems {
                let c = a.mul(b).mul(&a.inverse()).mul(&b.inverse());
                if !c.is_identity() && seen.insert(c.clone()) {
                    gens.push(c);
                }
            }
        }
        FiniteGroup::new(self.degree, gens)
    }

    pub fn derived_length(&self) -> usize {
        let mut cur = self.clone();
        let mut len = 0;
        while cur.order() > 1 {
            cur = cur.derived_subgroup();
            len += 1;
            assert!(len <= 20, "derived series does not terminate");
        }
        len
    }

    /// Lower central series G = Γ1 ⊇ Γ2 ⊇ ..., as groups. Stops when stable.
    pub fn lower_central_series(&self) -> Vec<FiniteGroup> {
        let mut series = vec![self.clone()];
        loop {
            let prev = series.last().unwrap();
            let mut gens: Vec<Permutation> = Vec::new();
            let mut seen = HashSet::new();
            for a in self.elements() {
                for b in prev.elements() {
                    let c = a.mul(b).mul(&a.inverse()).mul(&b.inverse());
                    if !c.is_identity() && seen.insert(c.clone()) {
                        gens.push(c);
                    }
                }
            }
            let next = FiniteGroup::new(self.degree, gens);
            if next.order() == prev.order() {
                break;
            }
            series.push(next);
            if series.last().unwrap().order() == 1 {
                break;
            }
        }
        series
    }

    /// Normal closure of the given elements.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> FiniteGroup {
        let elems = self.elements();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for s in seeds {
            for x in elems {
                let c = x.inverse().mul(s).mul(x);
                if !c.is_identity() && seen.insert(c.clone()) {
                    gens.push(c);
                }
            }
        }
        FiniteGroup::new(self.degree, gens)
    }

    /// Permutation action on the right cosets of a subgroup. The subgroup
    /// must be a subgroup of `self` over the same degree.
    pub fn coset_action(&self, subgroup: &FiniteGroup) -> FiniteGroup {
        let sub = subgroup.elements();
        let sub_set: HashSet<&Permutation> = sub.iter().collect();
        // Enumerate coset representatives breadth first.
        let mut reps: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
        for s in sub {
            coset_of.insert(s.clone(), 0);
        }
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head].clone();
            head += 1;
            for g in &self.gens {
                let x = r.mul(g);
                if !coset_of.contains_key(&x) {
                    let idx = reps.len();
                    for s in sub {
                        coset_of.insert(s.mul(&x), idx);
                    }
                    debug_assert!(sub_set.contains(&Permutation::identity(self.degree)));
                    reps.push(x);
                }
            }
        }
        let n = reps.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let map = (0..n).map(|c| coset_of[&reps[c].mul(g)] as u32).collect();
                Permutation::from_images(map).expect("coset action is a permutation")
            })
            .collect();
        FiniteGroup::new(n, gens)
    }

    /// Invariant factors of an abelian group, ascending divisibility chain.
    /// Derived from element counts: for each prime power p^k the number of
    /// solutions of x^(p^k) = 1 determines the p-part multiset.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        assert!(self.is_abelian(), "abelian_invariants needs an abelian group");
        let n = self.order() as u64;
        if n == 1 {
            return vec![];
        }
        let mut primes = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            primes.push(m);
        }

        // exps[p] = multiset of exponents e with a cyclic factor Z_{p^e}.
        let mut factor_lists: Vec<Vec<u64>> = Vec::new();
        for &p in &primes {
            let count_pow = |k: u32| -> u64 {
                let pk = p.pow(k);
                self.elements().iter().filter(|e| e.pow_is_identity(pk)).count() as u64
            };
            let mut exponents = Vec::new();
            let mut k = 1;
            let mut prev = count_pow(0);
            loop {
                let cur = count_pow(k);
                // log_p(cur/prev) factors have exponent >= k.
                let mut ratio = cur / prev;
                let mut ge_k = 0u32;
                while ratio > 1 {
                    ratio /= p;
                    ge_k += 1;
                }
                if ge_k == 0 {
                    break;
                }
                exponents.push(ge_k);
                prev = cur;
                k += 1;
            }
            // exponents[j] = number of factors with exponent > j; convert to
            // a descending list of exponents.
            let mut list = Vec::new();
            for (j, &cnt) in exponents.iter().enumerate() {
                let next = exponents.get(j + 1).copied().unwrap_or(0);
                for _ in 0..cnt - next {
                    list.push((j + 1) as u32);
                }
            }
            list.sort_unstable_by(|a, b| b.cmp(a));
            factor_lists.push(list.into_iter().map(|e| p.pow(e)).collect());
        }

        let slots = factor_lists.iter().map(Vec::len).max().unwrap_or(0);
        let mut invariants = vec![1u64; slots];
        for list in &factor_lists {
            for (i, &f) in list.iter().enumerate() {
                invariants[i] *= f;
            }
        }
        invariants.retain(|&d| d > 1);
        invariants.reverse();
        invariants
    }
}

impl Permutation {
    fn pow_is_identity(&self, k: u64) -> bool {
        // Element order divides k iff x^k = 1.
        k % self.order() == 0
    }
}

/// Structure fingerprint used to compare groups without an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub element_orders: BTreeMap<u64, usize>,
    pub class_sizes: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub abelianization: Vec<u64>,
    pub derived_length: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let derived = g.derived_subgroup();
    let ab = g.coset_action(&derived);
    Fingerprint {
        order: g.order(),
        element_orders: g.element_order_histogram(),
        class_sizes: g.conjugacy_class_sizes(),
        center_order: g.center_order(),
        abelianization: ab.abelian_invariants(),
        derived_length: g.derived_length(),
    }
}

/// Named model group: a presentation together with a faithful permutation
/// realization, used as an identification target.
#[derive(Debug, Clone)]
pub struct NamedModel {
    pub name: String,
    pub relators: Vec<Word>,
    pub group: FiniteGroup,
}

/// Identification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identification {
    /// Explicit generator-image isomorphism verified on all model relators.
    Isomorphic { name: String, images: Vec<usize> },
    /// Same fingerprint as a model, no isomorphism search attempted.
    FingerprintMatch { name: String },
    Unknown,
}

/// Cap below which identification runs an explicit isomorphism search.
pub const ISO_SEARCH_CAP: usize = 48;

/// Identifies `g` against the models. For orders up to [`ISO_SEARCH_CAP`] a
/// verified generator-image isomorphism is required; above that only the
/// fingerprint is compared.
pub fn identify(g: &FiniteGroup, models: &[NamedModel]) -> Identification {
    let fp = fingerprint(g);
    for m in models {
        if m.group.order() != fp.order {
            continue;
        }
        if fingerprint(&m.group) != fp {
            continue;
        }
        if fp.order <= ISO_SEARCH_CAP {
            if let Some(images) = find_isomorphism(m, g) {
                return Identification::Isomorphic { name: m.name.clone(), images };
            }
        } else {
            return Identification::FingerprintMatch { name: m.name.clone() };
        }
    }
    Identification::Unknown
}

/// Searches for images of the model's presentation generators inside `g`
/// that satisfy every relator and generate the whole group. Returns element
/// indices into `g.elements()`.
pub fn find_isomorphism(model: &NamedModel, g: &FiniteGroup) -> Option<Vec<usize>> {
    if model.group.order() != g.order() {
        return None;
    }
    let n_gens = model.group.generators().len();
    let elems = g.elements();
    // Candidates per generator, filtered by element order.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for mg in model.group.generators() {
        let ord = mg.order();
        candidates.push((0..elems.len()).filter(|&i| elems[i].order() == ord).collect());
    }
    let mut chosen = vec![0usize; n_gens];

    fn relator_ok(relators: &[Word], images: &[Permutation], upto: usize) -> bool {
        relators.iter().all(|r| {
            if r.letters().iter().any(|l| l.gen >= upto) {
                return true;
            }
            evaluate_word(r, images).is_identity()
        })
    }

    fn rec(
        depth: usize,
        model: &NamedModel,
        g: &FiniteGroup,
        candidates: &[Vec<usize>],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let n_gens = model.group.generators().len();
        if depth == n_gens {
            let images: Vec<Permutation> =
                chosen.iter().map(|&i| g.elements()[i].clone()).collect();
            let sub = FiniteGroup::new(g.degree(), images);
            return sub.order() == g.order();
        }
        for &cand in &candidates[depth] {
            chosen[depth] = cand;
            let images: Vec<Permutation> =
                chosen[..=depth].iter().map(|&i| g.elements()[i].clone()).collect();
            if relator_ok(&model.relators, &images, depth + 1) && rec(depth + 1, model, g, candidates, chosen) {
                return true;
            }
        }
        false
    }

    if rec(0, model, g, &candidates, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}
