//! Canonical forms of spaces by a full permutation sweep.

use std::fmt;

use super::{default_label, FiniteSpace, PointSet};

/// `perm[i]` is the new index of old point `i`.
pub type Permutation = Vec<usize>;

/// Relation matrix of a space, comparable in row-major lexicographic order
/// (absent arrows sort before present ones).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceKey {
    n: u8,
    rows: Vec<u16>,
}

impl SpaceKey {
    fn from_rows(rows: impl Iterator<Item = u32>, n: usize) -> Self {
        SpaceKey {
            n: n as u8,
            rows: rows.map(|r| encode_row(r, n)).collect(),
        }
    }

    pub fn point_count(&self) -> usize {
        self.n as usize
    }

    /// Row-major bit string, `1` where the arrow is present.
    pub fn bit_string(&self) -> String {
        let n = self.n as usize;
        let mut s = String::with_capacity(n * n);
        for &row in &self.rows {
            for j in 0..n {
                s.push(if row >> (15 - j) & 1 == 1 { '1' } else { '0' });
            }
        }
        s
    }

    /// Inverse of [`SpaceKey::bit_string`] for an `n`-point space.
    pub fn from_bit_string(n: usize, bits: &str) -> Option<Self> {
        if n > super::MAX_POINTS || bits.len() != n * n {
            return None;
        }
        let bytes = bits.as_bytes();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = 0u16;
            for j in 0..n {
                match bytes[i * n + j] {
                    b'1' => row |= 1 << (15 - j),
                    b'0' => {}
                    _ => return None,
                }
            }
            rows.push(row);
        }
        Some(SpaceKey { n: n as u8, rows })
    }

    /// Closure rows (bit `j` of row `i` set iff `i -> j`).
    pub(crate) fn succ_rows(&self) -> Vec<u32> {
        let n = self.n as usize;
        self.rows
            .iter()
            .map(|&r| (0..n).fold(0u32, |acc, j| acc | (u32::from(r >> (15 - j) & 1) << j)))
            .collect()
    }

    pub(crate) fn push_bytes(&self, out: &mut Vec<u8>) {
        out.push(self.n);
        for r in &self.rows {
            out.extend_from_slice(&r.to_be_bytes());
        }
    }
}

impl fmt::Debug for SpaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpaceKey({}:{})", self.n, self.bit_string())
    }
}

impl fmt::Display for SpaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}

#[inline]
fn encode_row(row: u32, n: usize) -> u16 {
    PointSet(row).iter().take_while(|&j| j < n).fold(0u16, |acc, j| acc | (1 << (15 - j)))
}

/// Calls `visit` once for every permutation of `0..n` (Heap's algorithm).
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn permuted_key_rows(succ: &[u32], perm: &[usize], out: &mut [u16]) {
    for (i, &row) in succ.iter().enumerate() {
        out[perm[i]] = PointSet(row).iter().fold(0u16, |acc, j| acc | (1 << (15 - perm[j])));
    }
}

impl FiniteSpace {
    /// Key of the relation exactly as stored (no canonicalization).
    pub fn key(&self) -> SpaceKey {
        SpaceKey::from_rows(self.succ_rows().iter().copied(), self.len())
    }

    /// The lexicographically least relation matrix over all relabelings, the
    /// relabeled space (labels carried along) and the witnessing permutation.
    pub fn canonical_form(&self) -> (FiniteSpace, Permutation) {
        let n = self.len();
        let succ = self.succ_rows();
        let mut best: Option<(Vec<u16>, Permutation)> = None;
        let mut scratch = vec![0u16; n];
        for_each_permutation(n, |perm| {
            permuted_key_rows(succ, perm, &mut scratch);
            let better = match &best {
                None => true,
                Some((rows, _)) => scratch.as_slice() < rows.as_slice(),
            };
            if better {
                best = Some((scratch.clone(), perm.to_vec()));
            }
        });
        let (_, perm) = best.expect("at least one permutation");
        (self.permute(&perm), perm)
    }

    /// Canonical key: identical for two spaces iff they are homeomorphic.
    pub fn canonical_key(&self) -> SpaceKey {
        self.canonical_form().0.key()
    }

    /// Canonical representative with labels `a`, `b`, ...
    pub fn canonical(&self) -> FiniteSpace {
        self.canonical_form().0.with_default_labels()
    }

    /// Rebuild a space (labels `a`, `b`, ...) from a key.
    pub fn from_key(key: &SpaceKey) -> FiniteSpace {
        let n = key.point_count();
        FiniteSpace::from_rows_unchecked((0..n).map(default_label).collect(), key.succ_rows())
    }

    /// All permutations preserving the relation.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let n = self.len();
        let own = self.key().rows;
        let succ = self.succ_rows();
        let mut scratch = vec![0u16; n];
        let mut out = Vec::new();
        for_each_permutation(n, |perm| {
            permuted_key_rows(succ, perm, &mut scratch);
            if scratch == own {
                out.push(perm.to_vec());
            }
        });
        out.sort();
        out
    }

    /// A homeomorphism `self -> other` as a permutation, if one exists.
    pub fn homeomorphism_to(&self, other: &FiniteSpace) -> Option<Permutation> {
        if self.len() != other.len() {
            return None;
        }
        let (ca, pa) = self.canonical_form();
        let (cb, pb) = other.canonical_form();
        if !ca.same_relation(&cb) {
            return None;
        }
        let inv_b = invert(&pb);
        Some(pa.iter().map(|&k| inv_b[k]).collect())
    }
}

pub fn invert(perm: &[usize]) -> Permutation {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
