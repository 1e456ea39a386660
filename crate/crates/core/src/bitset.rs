/// Fixed-capacity bit set used by the clique searches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Elements strictly greater than `after`, ascending.
    pub fn iter_above(&self, after: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        let start = after.map_or(0, |a| a + 1);
        (start..self.words.len() * 64).filter(move |&i| self.contains(i))
    }
}
