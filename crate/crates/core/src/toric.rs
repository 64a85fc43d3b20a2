//! The polynomial ring `K[x, y, z]` attached to a pair of posets, a reverse
//! lexicographic order on it, the quadratic binomial generators of the toric
//! ideal of `Gamma(O(P), -C(Q))`, and machine verification that those
//! generators form a Groebner basis (Buchberger's criterion plus a Hilbert
//! cross-check).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;

use crate::polytopes::SizeMismatch;
use crate::poset::{AntichainSet, IdealSet, Poset};

/// One indeterminate of `K[x, y, z]`.
///
/// The derived `Ord` is only used for map keys; the term order ranks
/// variables through [`MonomialOrder`].
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Variable {
    /// Maps to `s`; substitutes for both `x` and `y` of the empty set.
    Z,
    /// `y_A` for a nonempty antichain `A = max(J)` of `Q`; maps to `t^-rho(A) s`.
    Y(AntichainSet),
    /// `x_I` for a nonempty ideal `I` of `P`; maps to `t^rho(I) s`.
    X(IdealSet),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Z => write!(f, "z"),
            Variable::Y(a) => write!(f, "y{}", a.as_subset()),
            Variable::X(i) => write!(f, "x{}", i.as_subset()),
        }
    }
}

/// Tie-break among variables the inclusion constraints leave unordered.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TieBreak {
    /// Sort same-cardinality ideals by ascending mask (the default).
    MaskAscending,
    /// Sort same-cardinality ideals by descending mask.
    MaskDescending,
}

/// A monomial as a dense exponent vector indexed by variable rank
/// (rank 0 is the smallest variable, always `z`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn power(nvars: usize, rank: usize, exp: u32) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[rank] = exp;
        m
    }

    fn quadratic(nvars: usize, r1: usize, r2: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[r1] += 1;
        m.exps[r2] += 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; asserts divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Graded reverse lexicographic comparison: compare total degree first;
    /// on ties the monomial with the higher power of the smallest
    /// distinguishing variable is the smaller one.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

/// A concrete linear extension of the partial variable-order constraints,
/// together with the `pi` image of every variable.
pub struct MonomialOrder {
    dim: usize,
    vars: Vec<Variable>,
    /// `pi[rank]` = exponent vector of the variable's image in
    /// `(t_1, ..., t_d, s)`.
    pi: Vec<Vec<i64>>,
    rank: BTreeMap<Variable, usize>,
}

impl MonomialOrder {
    /// Rank the variables: `z` lowest, then all `y`s, then all `x`s, each
    /// block sorted by the cardinality of the corresponding ideal with the
    /// chosen tie-break. Ideal inclusion implies a cardinality gap, so every
    /// tie-break yields a valid extension of the required constraints.
    pub fn build(p: &Poset, q: &Poset, tie: TieBreak) -> Result<MonomialOrder, SizeMismatch> {
        if p.size() != q.size() {
            return Err(SizeMismatch {
                p: p.size(),
                q: q.size(),
            });
        }
        let d = p.size();
        let sorted = |poset: &Poset| -> Vec<IdealSet> {
            let mut ideals: Vec<IdealSet> = poset
                .ideals()
                .into_iter()
                .filter(|i| !i.is_empty())
                .collect();
            match tie {
                TieBreak::MaskAscending => ideals.sort_by_key(|i| (i.len(), i.mask())),
                TieBreak::MaskDescending => ideals.sort_by_key(|i| (i.len(), Reverse(i.mask()))),
            }
            ideals
        };

        let mut vars = vec![Variable::Z];
        let mut pi = vec![unit_s(d)];
        for j in sorted(q) {
            let a = q.max_elements(j);
            vars.push(Variable::Y(a));
            let mut v = vec![0i64; d + 1];
            for i in a.as_subset().indices() {
                v[i - 1] = -1;
            }
            v[d] = 1;
            pi.push(v);
        }
        for i in sorted(p) {
            vars.push(Variable::X(i));
            let mut v = vec![0i64; d + 1];
            for e in i.as_subset().indices() {
                v[e - 1] = 1;
            }
            v[d] = 1;
            pi.push(v);
        }
        let rank = vars
            .iter()
            .enumerate()
            .map(|(r, &v)| (v, r))
            .collect::<BTreeMap<_, _>>();
        assert_eq!(rank.len(), vars.len(), "duplicate variable");
        Ok(MonomialOrder { dim: d, vars, pi, rank })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn rank_of(&self, v: Variable) -> usize {
        self.rank[&v]
    }

    /// The exponent vector of `pi(m)` in `(t_1, ..., t_d, s)`; its last
    /// entry is the total degree of `m`.
    pub fn pi_degree(&self, m: &Monomial) -> Vec<i64> {
        let mut out = vec![0i64; self.dim + 1];
        for (rank, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&self.pi[rank]) {
                *o += c * e as i64;
            }
        }
        out
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for rank in (0..self.nvars()).rev() {
            let e = m.exps()[rank];
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            let _ = write!(out, "{}", self.vars[rank]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

fn unit_s(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[d] = 1;
    v
}

/// Which rewriting rule produced a binomial, named by the shape of its
/// leading term.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BinomialKind {
    /// `x x` rewritten through union and intersection of ideals.
    XX,
    /// `y y` rewritten through union and the star ideal.
    YY,
    /// `x y` with a shared maximal index dropped from both.
    XY,
}

impl BinomialKind {
    /// Tag used in the diagnostics dump.
    pub fn diagnostics_label(self) -> &'static str {
        match self {
            BinomialKind::XX => "i",
            BinomialKind::YY => "ii",
            BinomialKind::XY => "iii",
        }
    }
}

/// A difference of two monomials; `first` is the designated leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binomial {
    first: Monomial,
    second: Monomial,
    kind: BinomialKind,
}

impl Binomial {
    pub fn first(&self) -> &Monomial {
        &self.first
    }

    pub fn second(&self) -> &Monomial {
        &self.second
    }

    pub fn kind(&self) -> BinomialKind {
        self.kind
    }

    /// Did the `x_empty = y_empty = z` substitution fire in the trailing
    /// term? Rank 0 is always `z`.
    pub fn second_has_z(&self) -> bool {
        self.second.exps()[0] > 0
    }
}

/// Outcome of reducing one S-pair.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct SPairOutcome {
    pub i: usize,
    pub j: usize,
    pub reduced_to_zero: bool,
}

/// What `verify_groebner` saw.
#[derive(Clone, Debug)]
pub struct GroebnerReport {
    /// Every generator's designated first monomial really is its leading
    /// term. Reduction is only attempted when this holds (it is what makes
    /// division terminate).
    pub leading_terms_ok: bool,
    pub s_pairs: Vec<SPairOutcome>,
    pub skipped_coprime: u64,
}

impl GroebnerReport {
    pub fn ok(&self) -> bool {
        self.leading_terms_ok && self.s_pairs.iter().all(|s| s.reduced_to_zero)
    }
}

/// Shape of the set of leading terms.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct InitialIdealProfile {
    pub quadratic: bool,
    pub squarefree: bool,
    pub z_free: bool,
}

/// The generator set of the toric ideal of `Gamma(O(P), -C(Q))` under a
/// fixed monomial order.
pub struct BinomialSystem {
    order: MonomialOrder,
    gens: Vec<Binomial>,
}

/// Build the full generator set for a poset pair. Deterministic: binomials
/// come out grouped by kind in the enumeration order of the ideal lists, and
/// duplicates (possible among the exchange binomials) are dropped.
pub fn build_system(p: &Poset, q: &Poset, tie: TieBreak) -> Result<BinomialSystem, SizeMismatch> {
    let order = MonomialOrder::build(p, q, tie)?;
    let nvars = order.nvars();

    let x_or_z = |i: IdealSet| -> usize {
        if i.is_empty() {
            0
        } else {
            order.rank_of(Variable::X(i))
        }
    };
    let y_of_antichain = |a: AntichainSet| -> usize {
        if a.is_empty() {
            0
        } else {
            order.rank_of(Variable::Y(a))
        }
    };
    let y_of_ideal = |j: IdealSet| -> usize { y_of_antichain(q.max_elements(j)) };

    let ideals_p: Vec<IdealSet> = p.ideals().into_iter().filter(|i| !i.is_empty()).collect();
    let ideals_q: Vec<IdealSet> = q.ideals().into_iter().filter(|j| !j.is_empty()).collect();

    let mut gens: Vec<Binomial> = Vec::new();
    let mut seen: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    let mut push = |first: Monomial, second: Monomial, kind: BinomialKind| {
        assert_ne!(first, second);
        assert_eq!(first.total_degree(), second.total_degree());
        if seen.insert((first.exps().to_vec(), second.exps().to_vec())) {
            gens.push(Binomial { first, second, kind });
        }
    };

    for (a, &i1) in ideals_p.iter().enumerate() {
        for &i2 in &ideals_p[a + 1..] {
            if !i1.incomparable(i2) {
                continue;
            }
            let first = Monomial::quadratic(nvars, x_or_z(i1), x_or_z(i2));
            let second =
                Monomial::quadratic(nvars, x_or_z(i1.union(i2)), x_or_z(i1.intersection(i2)));
            push(first, second, BinomialKind::XX);
        }
    }

    for (a, &j1) in ideals_q.iter().enumerate() {
        for &j2 in &ideals_q[a + 1..] {
            if !j1.incomparable(j2) {
                continue;
            }
            let first = Monomial::quadratic(nvars, y_of_ideal(j1), y_of_ideal(j2));
            let second = Monomial::quadratic(
                nvars,
                y_of_ideal(j1.union(j2)),
                y_of_ideal(q.star_product(j1, j2)),
            );
            push(first, second, BinomialKind::YY);
        }
    }

    for &i in &ideals_p {
        let max_i = p.max_elements(i);
        for e in max_i.as_subset().indices() {
            for &j in &ideals_q {
                let max_j = q.max_elements(j);
                if !max_j.as_subset().contains(e) {
                    continue;
                }
                let first = Monomial::quadratic(
                    nvars,
                    order.rank_of(Variable::X(i)),
                    order.rank_of(Variable::Y(max_j)),
                );
                let smaller_ideal = p
                    .try_ideal(crate::poset::Subset::from_mask(i.mask() & !(1 << (e - 1))))
                    .expect("removing a maximal element keeps an ideal");
                let smaller_antichain = q
                    .try_antichain(crate::poset::Subset::from_mask(
                        max_j.mask() & !(1 << (e - 1)),
                    ))
                    .expect("a subset of an antichain is an antichain");
                let second = Monomial::quadratic(
                    nvars,
                    x_or_z(smaller_ideal),
                    y_of_antichain(smaller_antichain),
                );
                push(first, second, BinomialKind::XY);
            }
        }
    }

    Ok(BinomialSystem { order, gens })
}

impl BinomialSystem {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.gens
    }

    pub fn pi_degree(&self, m: &Monomial) -> Vec<i64> {
        self.order.pi_degree(m)
    }

    /// Every generator balances under `pi`, i.e. lies in the toric ideal.
    pub fn kernel_membership_ok(&self) -> bool {
        self.gens
            .iter()
            .all(|g| self.pi_degree(&g.first) == self.pi_degree(&g.second))
    }

    /// Every generator's first monomial beats its second under the order.
    pub fn leading_terms_valid(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.first.cmp_revlex(&g.second) == Ordering::Greater)
    }

    /// Negative-control hook: swap the two sides of one generator, producing
    /// a deliberately corrupted set that verification must reject.
    pub fn swap_binomial_sides(&mut self, index: usize) {
        let g = &mut self.gens[index];
        core::mem::swap(&mut g.first, &mut g.second);
    }

    fn find_divisor(&self, m: &Monomial) -> Option<&Binomial> {
        self.gens.iter().find(|g| g.first.divides(m))
    }

    /// Rewrite `m` until no leading term divides it. Requires valid leading
    /// terms for termination; gives up after a generous step budget.
    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        let mut cur = m.clone();
        for _ in 0..1_000_000u64 {
            match self.find_divisor(&cur) {
                Some(g) => cur = g.first.div_into(&cur).mul(&g.second),
                None => return cur,
            }
        }
        panic!("binomial reduction exceeded its step budget; invalid leading terms?");
    }

    /// Normal form of the difference `u - v`; `None` means it reduces to 0.
    pub fn reduce(&self, u: &Monomial, v: &Monomial) -> Option<(Monomial, Monomial)> {
        let nu = self.normal_form(u);
        let nv = self.normal_form(v);
        if nu == nv {
            None
        } else {
            Some((nu, nv))
        }
    }

    /// Run Buchberger's criterion: all S-pairs with non-coprime leading
    /// terms must reduce to zero. Pairs with coprime leading terms reduce to
    /// zero automatically and are skipped.
    pub fn verify_groebner(&self) -> GroebnerReport {
        assert!(
            self.kernel_membership_ok(),
            "generator set leaves the toric ideal"
        );
        if !self.leading_terms_valid() {
            return GroebnerReport {
                leading_terms_ok: false,
                s_pairs: Vec::new(),
                skipped_coprime: 0,
            };
        }
        let mut s_pairs = Vec::new();
        let mut skipped = 0u64;
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let (gi, gj) = (&self.gens[i], &self.gens[j]);
                if gi.first.coprime(&gj.first) {
                    skipped += 1;
                    continue;
                }
                let l = gi.first.lcm(&gj.first);
                let u = gj.first.div_into(&l).mul(&gj.second);
                let v = gi.first.div_into(&l).mul(&gi.second);
                s_pairs.push(SPairOutcome {
                    i,
                    j,
                    reduced_to_zero: self.reduce(&u, &v).is_none(),
                });
            }
        }
        GroebnerReport {
            leading_terms_ok: true,
            s_pairs,
            skipped_coprime: skipped,
        }
    }

    pub fn buchberger_verify(&self) -> bool {
        self.verify_groebner().ok()
    }

    /// Shape of the leading-term set.
    pub fn initial_ideal_profile(&self) -> InitialIdealProfile {
        InitialIdealProfile {
            quadratic: self.gens.iter().all(|g| g.first.total_degree() == 2),
            squarefree: self.gens.iter().all(|g| g.first.is_squarefree()),
            z_free: self.gens.iter().all(|g| g.first.exps()[0] == 0),
        }
    }

    /// Number of degree-`n` monomials divisible by no leading term.
    pub fn standard_monomial_count(&self, n: usize) -> u64 {
        let nvars = self.order.nvars();
        let mut exps = vec![0u32; nvars];
        self.count_standard(&mut exps, 0, n as u32)
    }

    fn count_standard(&self, exps: &mut Vec<u32>, rank: usize, remaining: u32) -> u64 {
        if rank + 1 == exps.len() {
            exps[rank] = remaining;
            let m = Monomial { exps: exps.clone() };
            exps[rank] = 0;
            return u64::from(self.find_divisor(&m).is_none());
        }
        let mut total = 0;
        for e in 0..=remaining {
            exps[rank] = e;
            total += self.count_standard(exps, rank + 1, remaining - e);
        }
        exps[rank] = 0;
        total
    }

    /// Independent count of the degree-`n` piece of the toric ring: the
    /// number of distinct sums of `n` variable images under `pi`.
    pub fn hilbert_oracle(&self, n: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let d = self.order.dim();
        let base: Vec<Vec<i64>> = self.order.pi.iter().map(|v| v[..d].to_vec()).collect();
        let mut frontier: BTreeSet<Vec<i64>> = base.iter().cloned().collect();
        for _ in 2..=n {
            let mut next = BTreeSet::new();
            for s in &frontier {
                for b in &base {
                    next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>());
                }
            }
            frontier = next;
        }
        frontier.len() as u64
    }
}
