//! Colors and small color sets.

/// Colors are `1..=palette`.
pub type Color = u16;

/// Largest palette a game may use.
pub const MAX_PALETTE: Color = 255;

/// Bitset over colors `0..=255`; bit 0 is never set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet([u64; 4]);

impl ColorSet {
    pub const fn empty() -> Self {
        ColorSet([0; 4])
    }

    /// `{1, ..., palette}`.
    pub fn full(palette: Color) -> Self {
        let mut set = ColorSet::empty();
        for c in 1..=palette.min(MAX_PALETTE) {
            set.insert(c);
        }
        set
    }

    pub fn insert(&mut self, c: Color) {
        self.0[(c / 64) as usize] |= 1 << (c % 64);
    }

    pub fn remove(&mut self, c: Color) {
        self.0[(c / 64) as usize] &= !(1 << (c % 64));
    }

    pub fn contains(&self, c: Color) -> bool {
        c <= MAX_PALETTE && self.0[(c / 64) as usize] >> (c % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &ColorSet) -> ColorSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    pub fn min(&self) -> Option<Color> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i as Color * 64 + w.trailing_zeros() as Color)
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        (0..=MAX_PALETTE).filter(move |&c| self.contains(c))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut set = ColorSet::empty();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn behaves_like_btreeset(items in proptest::collection::vec(1u16..=255, 0..40), other in proptest::collection::vec(1u16..=255, 0..40)) {
            use std::collections::BTreeSet;
            let a: ColorSet = items.iter().copied().collect();
            let b: ColorSet = other.iter().copied().collect();
            let sa: BTreeSet<_> = items.iter().copied().collect();
            let sb: BTreeSet<_> = other.iter().copied().collect();
            prop_assert_eq!(a.len(), sa.len());
            prop_assert_eq!(a.min(), sa.iter().next().copied());
            prop_assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), sa.difference(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).len(), sa.intersection(&sb).count());
        }
    }

    #[test]
    fn full_palette() {
        let s = ColorSet::full(5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert!(!s.contains(0));
        assert_eq!(ColorSet::full(255).len(), 255);
    }
}
