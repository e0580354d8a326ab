/// Fixed-length dense bitmap with word-parallel shifted OR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bitmap {
    words: Vec<u64>,
    bits: usize,
}

impl Bitmap {
    pub fn zeros(bits: usize) -> Self {
        Bitmap {
            words: vec![0; bits.div_ceil(64)],
            bits,
        }
    }

    pub fn set(&mut self, idx: usize) {
        assert!(idx < self.bits);
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    #[cfg(test)]
    pub fn get(&self, idx: usize) -> bool {
        idx < self.bits && self.words[idx / 64] & (1 << (idx % 64)) != 0
    }

    pub fn or_assign(&mut self, other: &Bitmap) {
        debug_assert_eq!(self.bits, other.bits);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= *o;
        }
    }

    /// `self |= src << shift` in index space; negative `shift` moves bits
    /// toward index 0. Bits pushed past either end are dropped.
    pub fn or_shifted(&mut self, src: &Bitmap, shift: i64) {
        debug_assert_eq!(self.bits, src.bits);
        let n = self.words.len();
        let mag = shift.unsigned_abs() as usize;
        let (ws, bs) = (mag / 64, mag % 64);
        if ws >= n {
            return;
        }
        if shift >= 0 {
            for i in (ws..n).rev() {
                let j = i - ws;
                let mut v = src.words[j] << bs;
                if bs > 0 && j > 0 {
                    v |= src.words[j - 1] >> (64 - bs);
                }
                self.words[i] |= v;
            }
        } else {
            for i in 0..n - ws {
                let j = i + ws;
                let mut v = src.words[j] >> bs;
                if bs > 0 && j + 1 < n {
                    v |= src.words[j + 1] << (64 - bs);
                }
                self.words[i] |= v;
            }
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let rem = self.bits % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[cfg(test)]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let tz = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * 64 + tz)
            })
        })
    }
}
