//! Dense matrices over a prime field. Everything above GF(p) that is linear
//! over GF(p) (Frobenius, linearized polynomials, embeddings) ends up here.

use super::fp_poly::inv_mod_p;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    /// `rows x cols.len()` matrix whose j-th column is `cols[j]`.
    pub fn from_columns(p: u32, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate().take(rows) {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let acc = self.row(i).iter().zip(v).fold(0u64, |a, (&x, &y)| a + x as u64 * y as u64);
                (acc % p) as u32
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod_p(self.get(r, c), self.p) as u64;
            for j in 0..self.cols {
                let v = self.get(r, j) as u64 * inv % p;
                self.set(r, j, v as u32);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c) as u64;
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let t = f * self.get(r, j) as u64 % p;
                    let v = (self.get(i, j) as u64 + p - t) % p;
                    self.set(i, j, v as u32);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m.get(r, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Some solution of `M v = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let mut aug = Self::zeros(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i] % self.p);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = aug.get(r, self.cols);
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_vectors_are_killed() {
        // rank 2 over GF(5)
        let m = FpMatrix::from_columns(5, 3, &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4], vec![0, 0, 2]]);
        let ns = m.null_space();
        assert_eq!(ns.len() + m.rank(), 4);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_finds_preimage_or_reports_none() {
        let m = FpMatrix::from_columns(3, 2, &[vec![1, 0], vec![1, 0]]);
        assert_eq!(m.mul_vec(&m.solve(&[2, 0]).unwrap()), vec![2, 0]);
        assert!(m.solve(&[0, 1]).is_none());
    }
}
