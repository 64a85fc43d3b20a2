//! Finite posets on labeled elements `1..=d`, their poset ideals (down-sets)
//! and antichains, and the ideal-lattice operations the binomial generators
//! need.
//!
//! Subsets are carried as `d`-bit masks, so everything here is exhaustive
//! enumeration over at most `2^d` masks. Intended scale is `d <= 16`.

use alloc::vec::Vec;
use core::fmt;

/// A subset of a poset's ground set. Bit `i` stands for element `i + 1`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u64) -> Subset {
        Subset(mask)
    }

    /// Build from 1-based element indices.
    pub fn from_indices(indices: &[usize]) -> Subset {
        let mut mask = 0u64;
        for &i in indices {
            assert!(i >= 1, "element indices are 1-based");
            mask |= 1 << (i - 1);
        }
        Subset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        index >= 1 && self.0 >> (index - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 1-based element indices, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(bit + 1)
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A down-closed subset of a specific poset.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IdealSet(Subset);

/// A pairwise-incomparable subset of a specific poset.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AntichainSet(Subset);

impl IdealSet {
    pub fn as_subset(self) -> Subset {
        self.0
    }

    pub fn mask(self) -> u64 {
        self.0.mask()
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// Set union. The union of two ideals of one poset is again an ideal.
    pub fn union(self, other: IdealSet) -> IdealSet {
        IdealSet(Subset(self.mask() | other.mask()))
    }

    /// Set intersection, likewise an ideal.
    pub fn intersection(self, other: IdealSet) -> IdealSet {
        IdealSet(Subset(self.mask() & other.mask()))
    }

    /// Neither contains the other.
    pub fn incomparable(self, other: IdealSet) -> bool {
        let (a, b) = (self.mask(), other.mask());
        a & b != a && a & b != b
    }
}

impl AntichainSet {
    pub fn as_subset(self) -> Subset {
        self.0
    }

    pub fn mask(self) -> u64 {
        self.0.mask()
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    /// Transitive closure of the covers is not antisymmetric.
    Cycle,
    /// A cover index lies outside `1..=size`.
    Index { index: usize, size: usize },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::Cycle => write!(f, "cover relations close into a cycle"),
            PosetError::Index { index, size } => {
                write!(f, "element index {index} outside 1..={size}")
            }
        }
    }
}

/// A finite partial order on elements `1..=size`, stored as the
/// reflexive-transitive closure of its cover relations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    /// `up[i]` = mask of `j` with `p_{i+1} <= p_{j+1}` (includes `i`).
    up: Vec<u64>,
    /// `down[i]` = mask of `j` with `p_{j+1} <= p_{i+1}` (includes `i`).
    down: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(d={}, covers={:?})", self.size, self.covers())
    }
}

impl Poset {
    /// Build a poset from cover relations `(a, b)` meaning `p_a < p_b`
    /// (1-based). The stored relation is the reflexive-transitive closure.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        assert!((1..=64).contains(&size), "poset size must be in 1..=64");
        let mut up: Vec<u64> = (0..size).map(|i| 1u64 << i).collect();
        for &(a, b) in covers {
            for index in [a, b] {
                if index < 1 || index > size {
                    return Err(PosetError::Index { index, size });
                }
            }
            if a == b {
                // a self-cover closes into a one-element cycle
                return Err(PosetError::Cycle);
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // Floyd-Warshall on bit rows.
        for k in 0..size {
            for i in 0..size {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        let poset = Poset::from_up(size, up);
        for i in 0..size {
            if poset.up[i] & poset.down[i] != 1 << i {
                return Err(PosetError::Cycle);
            }
        }
        Ok(poset)
    }

    fn from_up(size: usize, up: Vec<u64>) -> Poset {
        let mut down = alloc::vec![0u64; size];
        for (i, &row) in up.iter().enumerate() {
            let mut rest = row;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                down[j] |= 1 << i;
            }
        }
        Poset { size, up, down }
    }

    /// The chain `p_1 < p_2 < ... < p_d`.
    pub fn chain(size: usize) -> Poset {
        let covers: Vec<(usize, usize)> = (1..size).map(|i| (i, i + 1)).collect();
        Poset::from_covers(size, &covers).expect("a chain has no cycles")
    }

    /// The d-element antichain (empty order).
    pub fn antichain(size: usize) -> Poset {
        Poset::from_covers(size, &[]).expect("an empty relation has no cycles")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `p_i <= p_j`, 1-based.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i - 1] >> (j - 1) & 1 == 1
    }

    /// `p_i < p_j`, 1-based.
    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    fn full_mask(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        debug_assert_eq!(s.mask() & !self.full_mask(), 0);
        let mut rest = s.mask();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.down[i] & !s.mask() != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_antichain(&self, s: Subset) -> bool {
        debug_assert_eq!(s.mask() & !self.full_mask(), 0);
        let mut rest = s.mask();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.up[i] | self.down[i]) & s.mask() != 1 << i {
                return false;
            }
        }
        true
    }

    pub fn try_ideal(&self, s: Subset) -> Option<IdealSet> {
        self.is_ideal(s).then_some(IdealSet(s))
    }

    pub fn try_antichain(&self, s: Subset) -> Option<AntichainSet> {
        self.is_antichain(s).then_some(AntichainSet(s))
    }

    /// Checked constructor from 1-based indices; panics on a non-ideal.
    pub fn ideal_of(&self, indices: &[usize]) -> IdealSet {
        self.try_ideal(Subset::from_indices(indices))
            .expect("subset is not down-closed")
    }

    /// Checked constructor from 1-based indices; panics on a non-antichain.
    pub fn antichain_of(&self, indices: &[usize]) -> AntichainSet {
        self.try_antichain(Subset::from_indices(indices))
            .expect("subset contains a comparable pair")
    }

    /// All poset ideals (including the empty set and the whole poset),
    /// ordered by (cardinality, mask).
    pub fn ideals(&self) -> Vec<IdealSet> {
        let mut out: Vec<IdealSet> = (0..=self.full_mask())
            .filter_map(|mask| self.try_ideal(Subset(mask)))
            .collect();
        out.sort_by_key(|i| (i.len(), i.mask()));
        out
    }

    /// All antichains (including the empty set), ordered by (cardinality, mask).
    pub fn antichains(&self) -> Vec<AntichainSet> {
        let mut out: Vec<AntichainSet> = (0..=self.full_mask())
            .filter_map(|mask| self.try_antichain(Subset(mask)))
            .collect();
        out.sort_by_key(|a| (a.len(), a.mask()));
        out
    }

    /// Maximal elements of an ideal. This is the inverse of
    /// [`Poset::ideal_from_antichain`]: together they form the standard
    /// bijection between ideals and antichains.
    pub fn max_elements(&self, ideal: IdealSet) -> AntichainSet {
        let mask = ideal.mask();
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.up[i] & mask == 1 << i {
                out |= 1 << i;
            }
        }
        AntichainSet(Subset(out))
    }

    /// Down-closure of an arbitrary subset.
    pub fn down_closure(&self, s: Subset) -> IdealSet {
        let mut out = 0u64;
        let mut rest = s.mask();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.down[i];
        }
        IdealSet(Subset(out))
    }

    /// The ideal generated by an antichain (its down-closure).
    pub fn ideal_from_antichain(&self, a: AntichainSet) -> IdealSet {
        self.down_closure(a.as_subset())
    }

    /// The ideal generated by `max(J /\ J') /\ (max(J) \/ max(J'))`.
    pub fn star_product(&self, j: IdealSet, j2: IdealSet) -> IdealSet {
        let meet = j.intersection(j2);
        let generators = self.max_elements(meet).mask()
            & (self.max_elements(j).mask() | self.max_elements(j2).mask());
        self.down_closure(Subset(generators))
    }

    /// Cover pairs `(a, b)` with `p_a < p_b`, 1-based, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.size {
            for b in 1..=self.size {
                if !self.less(a, b) {
                    continue;
                }
                let between = (1..=self.size).any(|k| self.less(a, k) && self.less(k, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Rename elements: `perm[i - 1]` is the new 1-based label of element `i`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.size);
        let mut up = alloc::vec![0u64; self.size];
        for i in 1..=self.size {
            for j in 1..=self.size {
                if self.leq(i, j) {
                    up[perm[i - 1] - 1] |= 1 << (perm[j - 1] - 1);
                }
            }
        }
        Poset::from_up(self.size, up)
    }

    /// Is `order` (a permutation of `1..=d`, listed bottom to top) a linear
    /// extension of this poset?
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        assert_eq!(order.len(), self.size);
        let mut pos = alloc::vec![0usize; self.size];
        for (k, &i) in order.iter().enumerate() {
            pos[i - 1] = k;
        }
        for i in 1..=self.size {
            for j in 1..=self.size {
                if self.less(i, j) && pos[i - 1] >= pos[j - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// Every labeled partial order on `1..=size`, in a fixed deterministic
    /// order. Counts grow as 1, 3, 19, 219, 4231, ... so keep `size` small.
    pub fn enumerate_all(size: usize) -> Vec<Poset> {
        assert!((1..=6).contains(&size), "labeled-poset sweep limited to d <= 6");
        let pairs: Vec<(usize, usize)> = (0..size)
            .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        'mask: for rel in 0u64..1 << pairs.len() {
            let mut strict = alloc::vec![0u64; size];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if rel >> k & 1 == 1 {
                    strict[i] |= 1 << j;
                }
            }
            for i in 0..size {
                let mut rest = strict[i];
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    // antisymmetry and transitivity of the strict relation
                    if strict[j] >> i & 1 == 1 || strict[j] & !strict[i] != 0 {
                        continue 'mask;
                    }
                }
            }
            let up = (0..size).map(|i| strict[i] | 1 << i).collect();
            out.push(Poset::from_up(size, up));
        }
        out
    }
}

/// Do `p` and `q` possess a common linear extension? Brute force over all
/// `d!` orderings.
pub fn shares_linear_extension(p: &Poset, q: &Poset) -> bool {
    assert_eq!(p.size(), q.size());
    let mut order: Vec<usize> = (1..=p.size()).collect();
    permutations(&mut order, 0, &mut |order| {
        p.is_linear_extension(order) && q.is_linear_extension(order)
    })
}

fn permutations(items: &mut [usize], k: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return found(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, found) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}
