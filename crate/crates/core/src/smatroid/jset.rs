use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::MatroidError;

/// Largest supported ground-set size `n` (so `J` has `2n <= 64` elements).
pub const MAX_GROUND: usize = 32;

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// An element `i` or `i*` of `J = [n] ∪ [n]*`, with 1-based `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JElement {
    pub index: u32,
    pub starred: bool,
}

impl JElement {
    pub fn plain(index: u32) -> Self {
        Self { index, starred: false }
    }

    pub fn starred(index: u32) -> Self {
        Self { index, starred: true }
    }

    pub fn star(self) -> Self {
        Self { index: self.index, starred: !self.starred }
    }

    #[inline]
    pub(crate) fn bit(self) -> u32 {
        2 * (self.index - 1) + u32::from(self.starred)
    }

    #[inline]
    pub(crate) fn from_bit(bit: u32) -> Self {
        Self { index: bit / 2 + 1, starred: bit % 2 == 1 }
    }
}

impl fmt::Display for JElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "{}*", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for JElement {
    type Err = MatroidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, starred) = match s.strip_suffix('*') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let index: u32 = digits.parse().map_err(|_| MatroidError::BadElement(s.to_string()))?;
        if index == 0 || index as usize > MAX_GROUND {
            return Err(MatroidError::BadElement(s.to_string()));
        }
        Ok(Self { index, starred })
    }
}

/// A subset of `J` that never holds both `i` and `i*`.
///
/// Stored as a bitmask with `i` at bit `2(i-1)` and `i*` at bit `2(i-1)+1`,
/// so the involution swaps adjacent bit pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AdmissibleSet(u64);

impl AdmissibleSet {
    pub const EMPTY: Self = Self(0);

    pub fn from_bits(bits: u64) -> Result<Self, MatroidError> {
        if bits & (bits >> 1) & EVEN_BITS != 0 {
            return Err(MatroidError::NotAdmissible(Self(bits).to_string()));
        }
        Ok(Self(bits))
    }

    pub(crate) const fn from_bits_unchecked(bits: u64) -> Self {
        Self(bits)
    }

    pub fn from_elements<I: IntoIterator<Item = JElement>>(elements: I) -> Result<Self, MatroidError> {
        let mut bits = 0u64;
        for e in elements {
            if e.index == 0 || e.index as usize > MAX_GROUND {
                return Err(MatroidError::BadElement(e.to_string()));
            }
            bits |= 1 << e.bit();
        }
        Self::from_bits(bits)
    }

    /// All unstarred elements `{1, ..., n}`.
    pub fn plain_range(n: usize) -> Self {
        Self(interleave_even(index_mask(n)))
    }

    /// A set with sign pattern `signs` (bit `i-1` set means `i*`) on the
    /// indices in `support` (bit `i-1` set means index `i` is present).
    pub fn signed(support: u32, signs: u32) -> Self {
        let s = interleave_even(support);
        let starred = interleave_even(signs & support);
        Self((s & !starred) | (starred << 1))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: JElement) -> bool {
        self.0 >> e.bit() & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersection_len(self, other: Self) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    /// Union, if it is still admissible.
    pub fn union(self, other: Self) -> Option<Self> {
        Self::from_bits(self.0 | other.0).ok()
    }

    #[inline]
    pub fn without(self, e: JElement) -> Self {
        Self(self.0 & !(1 << e.bit()))
    }

    pub fn with(self, e: JElement) -> Option<Self> {
        Self::from_bits(self.0 | 1 << e.bit()).ok()
    }

    /// The involution `*` applied elementwise.
    #[inline]
    pub fn star(self) -> Self {
        Self(((self.0 & EVEN_BITS) << 1) | ((self.0 >> 1) & EVEN_BITS))
    }

    /// Indices touched, as a mask with bit `i-1` for index `i` (the map that forgets stars).
    pub fn support(self) -> u32 {
        compress_even((self.0 | self.0 >> 1) & EVEN_BITS)
    }

    /// Count of unstarred elements, `|S ∩ [n]|`.
    #[inline]
    pub fn plain_count(self) -> usize {
        (self.0 & EVEN_BITS).count_ones() as usize
    }

    #[inline]
    pub fn starred_count(self) -> usize {
        (self.0 & !EVEN_BITS).count_ones() as usize
    }

    pub fn max_index(self) -> u32 {
        if self.0 == 0 {
            0
        } else {
            (63 - self.0.leading_zeros()) / 2 + 1
        }
    }

    /// Elements in canonical order `1 < 1* < 2 < 2* < ...`.
    pub fn elements(self) -> impl Iterator<Item = JElement> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros();
            bits &= bits - 1;
            Some(JElement::from_bit(b))
        })
    }

    /// Shifts every index up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        Self(self.0 << (2 * offset))
    }

    /// Every admissible subset of `J` over ground `n` with exactly `k` elements,
    /// in canonical order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = Self> {
        support_masks(n, k)
            .flat_map(move |support| (0..1u32 << k).map(move |signs| Self::signed(support, deposit(signs, support))))
    }

    /// Every admissible subset of `J` over ground `n`.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (0..=n).flat_map(move |k| Self::all_of_size(n, k))
    }
}

/// Canonical order: by size, then lexicographically on the sorted element
/// sequences under `1 < 1* < 2 < 2* < ...`.
impl Ord for AdmissibleSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for AdmissibleSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for AdmissibleSet {
    type Err = MatroidError;

    /// Accepts `{1, 2*, 3}`, `1 2* 3` or `{}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elements = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<JElement>, _>>()?;
        let set = Self::from_elements(elements.iter().copied())?;
        if set.len() != elements.len() {
            return Err(MatroidError::NotAdmissible(s.to_string()));
        }
        Ok(set)
    }
}

/// Space-separated element list, the syntax of `basis` lines.
pub fn format_elements(s: AdmissibleSet) -> String {
    s.elements().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn index_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Spreads bit `i` of `x` to bit `2i`.
pub(crate) fn interleave_even(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v << 8)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & EVEN_BITS;
    v
}

/// Inverse of [`interleave_even`] on masks with only even bits set.
pub(crate) fn compress_even(v: u64) -> u32 {
    let mut v = v & EVEN_BITS;
    v = (v | (v >> 1)) & 0x3333_3333_3333_3333;
    v = (v | (v >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v >> 4)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v >> 8)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v >> 16)) & 0x0000_0000_FFFF_FFFF;
    v as u32
}

/// Scatters the low `popcount(mask)` bits of `bits` onto the set bits of `mask`.
pub(crate) fn deposit(bits: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if bits >> i & 1 == 1 {
            out |= low;
        }
        m &= m - 1;
        i += 1;
    }
    out
}

/// All `k`-subsets of `{0..n}` as bitmasks, in increasing numeric order
/// restricted to each size (Gosper's hack).
pub(crate) fn support_masks(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nx = (((r ^ cur) >> 2) / c) | r;
            (nx < limit).then_some(nx)
        };
        Some(cur as u32)
    })
}
