//! Dense GF(2) row reduction on bit-packed rows.

/// A row vector over GF(2), packed 64 columns per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Row {
    words: Vec<u64>,
}

impl Gf2Row {
    pub fn zero(ncols: usize) -> Self {
        Gf2Row {
            words: vec![0; ncols.div_ceil(64)],
        }
    }

    pub fn set(&mut self, col: usize) {
        self.words[col / 64] ^= 1 << (col % 64);
    }

    pub fn xor_in(&mut self, other: &Gf2Row) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn leading_bit(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Rank of the span of the given rows, by incremental elimination.
pub fn rank(rows: impl IntoIterator<Item = Gf2Row>) -> usize {
    // Pivot rows indexed by their leading column.
    let mut pivots: Vec<(usize, Gf2Row)> = Vec::new();
    for mut row in rows {
        while let Some(lead) = row.leading_bit() {
            match pivots.binary_search_by_key(&lead, |(l, _)| *l) {
                Ok(i) => {
                    let pivot = pivots[i].1.clone();
                    row.xor_in(&pivot);
                }
                Err(i) => {
                    pivots.insert(i, (lead, row));
                    break;
                }
            }
        }
    }
    pivots.len()
}
