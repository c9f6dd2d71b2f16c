//! Subset collections and their combinatorics: the partition inequality that
//! makes a collection generic, and deterministic enumeration of the
//! collections the verifier quantifies over.
//!
//! Indices are 0-based in memory and 1-based on the wire.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered multiset of subsets of `[n]`, held in canonical form:
/// sets sorted by size descending, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetCollection {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl SubsetCollection {
    /// Build from 0-based index sets. Elements are validated and the
    /// collection is canonicalized; repeated subsets are allowed.
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut canon = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadCollection(
                    "repeated element inside a subset".to_string(),
                ));
            }
            if let Some(&max) = s.last() {
                if max >= n {
                    return Err(Error::BadCollection(format!(
                        "element {} outside ambient [{}]",
                        max + 1,
                        n
                    )));
                }
            }
            canon.push(s);
        }
        canon.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(SubsetCollection { n, sets: canon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of sets in the collection.
    pub fn ell(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn has_empty_set(&self) -> bool {
        self.sets.iter().any(Vec::is_empty)
    }

    /// Bitmask form, for the partition checks. Ambient sizes beyond 128 are
    /// outside enumeration scale.
    pub(crate) fn masks(&self) -> Result<Vec<u128>> {
        if self.n > 128 {
            return Err(Error::AmbientTooLarge(self.n));
        }
        Ok(self
            .sets
            .iter()
            .map(|s| s.iter().fold(0u128, |m, &i| m | (1 << i)))
            .collect())
    }
}

#[derive(Serialize, Deserialize)]
struct RawCollection {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl Serialize for SubsetCollection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = RawCollection {
            n: self.n,
            sets: self
                .sets
                .iter()
                .map(|set| set.iter().map(|&i| i + 1).collect())
                .collect(),
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetCollection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCollection::deserialize(d)?;
        let mut sets = Vec::with_capacity(raw.sets.len());
        for s in raw.sets {
            let mut t = Vec::with_capacity(s.len());
            for i in s {
                if i == 0 {
                    return Err(serde::de::Error::custom("indices are 1-based"));
                }
                t.push(i - 1);
            }
            sets.push(t);
        }
        SubsetCollection::new(raw.n, sets).map_err(serde::de::Error::custom)
    }
}

/// A partition of `[ell]` into nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// All set partitions of `[ell]`, in restricted-growth-string order.
pub fn partitions(ell: usize) -> Partitions {
    Partitions {
        rgs: vec![0; ell],
        done: ell == 0,
    }
}

pub struct Partitions {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let nblocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        let item = SetPartition { blocks };

        // advance: rightmost position that may grow, capped by prefix max + 1
        let n = self.rgs.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let prefix_max = *self.rgs[..i].iter().max().unwrap();
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                }
                break;
            }
        }
        Some(item)
    }
}

/// The partition inequality: for every partition P_1 | ... | P_s of the
/// collection's index set, the intersection sizes must satisfy
/// sum_i |inter_{j in P_i} A_j| <= (s - 1) * k.
///
/// Fails fast on the first violated partition.
pub fn is_generic(c: &SubsetCollection, k: usize) -> Result<bool> {
    for s in c.sets() {
        if s.len() > k {
            return Err(Error::SubsetTooLarge { size: s.len(), k });
        }
    }
    let masks = c.masks()?;
    Ok(generic_masks(&masks, k, &partition_masks(c.ell())))
}

/// Partitions of `[ell]` as block bitmasks over set indices; precomputed once
/// per enumeration.
fn partition_masks(ell: usize) -> Vec<Vec<u64>> {
    partitions(ell)
        .map(|p| {
            p.blocks()
                .iter()
                .map(|b| b.iter().fold(0u64, |m, &i| m | (1 << i)))
                .collect()
        })
        .collect()
}

fn generic_masks(masks: &[u128], k: usize, parts: &[Vec<u64>]) -> bool {
    for blocks in parts {
        let mut total = 0usize;
        let budget = (blocks.len() - 1) * k;
        for &bm in blocks {
            let mut inter = u128::MAX;
            let mut bits = bm;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                inter &= masks[i];
                bits &= bits - 1;
            }
            total += inter.count_ones() as usize;
            if total > budget {
                break;
            }
        }
        if total > budget {
            return false;
        }
    }
    true
}

/// Every canonical multiset of `ell` nonempty subsets of `[n]` with all sizes
/// at most `k`, total size exactly `(ell-1)*k`, that passes [`is_generic`].
///
/// Deterministic order: size signatures ascending lexicographically, then
/// subsets advancing lexicographically (rightmost fastest).
pub fn enumerate_generic(n: usize, k: usize, ell: usize) -> Result<GenericCollections> {
    if k < 1 || k > n {
        return Err(Error::BadParams(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    if ell < 2 {
        return Err(Error::EllTooSmall { got: ell, min: 2 });
    }
    if n > 128 {
        return Err(Error::AmbientTooLarge(n));
    }
    let target = (ell - 1) * k;
    let sigs = signatures(target, ell, k);
    let mut combos_by_size = vec![Vec::new(); k + 1];
    for (size, out) in combos_by_size.iter_mut().enumerate().skip(1) {
        *out = subset_masks(n, size);
    }
    Ok(GenericCollections {
        n,
        k,
        sigs,
        sig_idx: 0,
        idx: Vec::new(),
        fresh: true,
        combos_by_size,
        parts: partition_masks(ell),
    })
}

/// Non-increasing `ell`-tuples with entries in [1, k] summing to `total`,
/// ascending lexicographically.
fn signatures(total: usize, ell: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ell);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, left: usize, slots: usize, max: usize) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // each remaining slot needs at least 1
        for v in 1..=max.min(left.saturating_sub(slots - 1)) {
            cur.push(v);
            rec(out, cur, left - v, slots - 1, v);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, total, ell, k);
    // recursion produces descending-first order; the spec order is ascending lex
    out.sort();
    out
}

fn subset_masks(n: usize, size: usize) -> Vec<u128> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(idx.iter().fold(0u128, |m, &i| m | (1 << i)));
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn mask_to_set(mut m: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub struct GenericCollections {
    n: usize,
    k: usize,
    sigs: Vec<Vec<usize>>,
    sig_idx: usize,
    idx: Vec<usize>,
    fresh: bool,
    combos_by_size: Vec<Vec<u128>>,
    parts: Vec<Vec<u64>>,
}

impl GenericCollections {
    /// Step the slot odometer for the current signature. Slots of equal size
    /// keep non-decreasing combination indices so each multiset appears once.
    fn advance(&mut self) -> bool {
        let sig = &self.sigs[self.sig_idx];
        let ell = sig.len();
        let mut i = ell;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            let limit = self.combos_by_size[sig[i]].len();
            if self.idx[i] + 1 < limit {
                self.idx[i] += 1;
                for j in i + 1..ell {
                    self.idx[j] = if sig[j] == sig[j - 1] { self.idx[j - 1] } else { 0 };
                }
                return true;
            }
        }
    }
}

impl Iterator for GenericCollections {
    type Item = SubsetCollection;

    fn next(&mut self) -> Option<SubsetCollection> {
        loop {
            if self.sig_idx >= self.sigs.len() {
                return None;
            }
            if self.fresh {
                let sig = &self.sigs[self.sig_idx];
                if sig.iter().any(|&s| self.combos_by_size[s].is_empty()) {
                    self.sig_idx += 1;
                    continue;
                }
                self.idx = vec![0; sig.len()];
                self.fresh = false;
            } else if !self.advance() {
                self.sig_idx += 1;
                self.fresh = true;
                continue;
            }
            let sig = &self.sigs[self.sig_idx];
            let masks: Vec<u128> = sig
                .iter()
                .zip(&self.idx)
                .map(|(&s, &i)| self.combos_by_size[s][i])
                .collect();
            if generic_masks(&masks, self.k, &self.parts) {
                let sets = masks.iter().map(|&m| mask_to_set(m)).collect();
                return Some(
                    SubsetCollection::new(self.n, sets).expect("enumerated sets are valid"),
                );
            }
        }
    }
}

/// Collections of exactly `k` *distinct* subsets of size `k - 1` passing
/// [`is_generic`]; the reduced final stage of the order-k verification.
pub fn enumerate_km1_generic(n: usize, k: usize) -> Result<Km1Collections> {
    if k < 2 {
        return Err(Error::BadParams(format!("need k >= 2, got k={k}")));
    }
    if n > 128 {
        return Err(Error::AmbientTooLarge(n));
    }
    let combos = subset_masks(n, k - 1);
    Ok(Km1Collections {
        n,
        k,
        idx: (0..k).collect(),
        started: false,
        combos,
        parts: partition_masks(k),
    })
}

pub struct Km1Collections {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
    combos: Vec<u128>,
    parts: Vec<Vec<u64>>,
}

impl Iterator for Km1Collections {
    type Item = SubsetCollection;

    fn next(&mut self) -> Option<SubsetCollection> {
        let k = self.k;
        if self.combos.len() < k {
            return None;
        }
        loop {
            if self.started {
                // next strictly-increasing k-combination of combo indices
                let m = self.combos.len();
                let mut i = k;
                loop {
                    if i == 0 {
                        return None;
                    }
                    i -= 1;
                    if self.idx[i] != i + m - k {
                        self.idx[i] += 1;
                        for j in i + 1..k {
                            self.idx[j] = self.idx[j - 1] + 1;
                        }
                        break;
                    }
                }
            } else {
                self.started = true;
            }
            let masks: Vec<u128> = self.idx.iter().map(|&i| self.combos[i]).collect();
            if generic_masks(&masks, k, &self.parts) {
                let sets = masks.iter().map(|&m| mask_to_set(m)).collect();
                return Some(
                    SubsetCollection::new(self.n, sets).expect("enumerated sets are valid"),
                );
            }
        }
    }
}
