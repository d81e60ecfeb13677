//! Total maps between finite sets `{0, .., n-1}`, the set-backend analogue
//! of `ExactMatrix`. Product sets are indexed with the leftmost factor most
//! significant, matching the tensor-word basis order.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    pub source: usize,
    pub target: usize,
    table: Vec<usize>,
}

/// Proof that a self-map is not bijective: two points with the same image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionWitness {
    pub first: usize,
    pub second: usize,
    pub image: usize,
}

impl FiniteMap {
    pub fn new(source: usize, target: usize, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), source, "table length != source size");
        assert!(table.iter().all(|&v| v < target), "image out of range");
        FiniteMap { source, target, table }
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap { source: n, target: n, table: (0..n).collect() }
    }

    pub fn from_fn(source: usize, target: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::new(source, target, (0..source).map(f).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `self` after `rhs`: apply `rhs` first.
    pub fn after(&self, rhs: &FiniteMap) -> FiniteMap {
        assert_eq!(rhs.target, self.source, "composition shape mismatch");
        FiniteMap::from_fn(rhs.source, self.target, |i| self.apply(rhs.apply(i)))
    }

    /// Cartesian product with `self` on the most significant digits.
    pub fn product(&self, rhs: &FiniteMap) -> FiniteMap {
        FiniteMap::from_fn(self.source * rhs.source, self.target * rhs.target, |i| {
            let (a, b) = (i / rhs.source, i % rhs.source);
            self.apply(a) * rhs.target + rhs.apply(b)
        })
    }

    /// Inverse map if bijective, else a collision pair.
    pub fn invert(&self) -> Result<FiniteMap, CollisionWitness> {
        assert_eq!(self.source, self.target, "inverse of non-square map");
        let mut seen: Vec<Option<usize>> = vec![None; self.target];
        for (i, &v) in self.table.iter().enumerate() {
            if let Some(first) = seen[v] {
                return Err(CollisionWitness { first, second: i, image: v });
            }
            seen[v] = Some(i);
        }
        let mut inv = vec![0; self.target];
        for (i, &v) in self.table.iter().enumerate() {
            inv[v] = i;
        }
        Ok(FiniteMap::new(self.target, self.source, inv))
    }

    /// Image factorization of an idempotent `q = incl * retr` with
    /// `retr * incl = identity` on the image.
    pub fn split_idempotent(&self) -> (FiniteMap, FiniteMap) {
        assert_eq!(self.source, self.target, "idempotent must be square");
        debug_assert_eq!(self.after(self), *self, "not idempotent");
        let mut image: Vec<usize> = self.table.clone();
        image.sort_unstable();
        image.dedup();
        let incl = FiniteMap::new(image.len(), self.source, image.clone());
        let retr = FiniteMap::from_fn(self.source, image.len(), |x| {
            image.binary_search(&self.apply(x)).expect("q(x) lies in the image")
        });
        debug_assert_eq!(retr.after(&incl), FiniteMap::identity(image.len()));
        debug_assert_eq!(incl.after(&retr), *self);
        (incl, retr)
    }
}

impl fmt::Display for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_product() {
        let f = FiniteMap::new(2, 3, vec![2, 0]);
        let g = FiniteMap::new(3, 2, vec![1, 1, 0]);
        assert_eq!(g.after(&f), FiniteMap::new(2, 2, vec![0, 1]));
        let p = f.product(&g);
        // (1, 2) -> (f(1), g(2)) = (0, 0); index 1*3+2=5 -> 0*2+0=0.
        assert_eq!(p.apply(5), 0);
        assert_eq!(p.source, 6);
        assert_eq!(p.target, 6);
    }

    #[test]
    fn bijection_and_collision() {
        let cycle = FiniteMap::new(4, 4, vec![1, 2, 3, 0]);
        let inv = cycle.invert().unwrap();
        assert_eq!(inv.after(&cycle), FiniteMap::identity(4));
        let squash = FiniteMap::new(3, 3, vec![0, 1, 1]);
        let w = squash.invert().unwrap_err();
        assert_eq!((w.first, w.second, w.image), (1, 2, 1));
    }

    #[test]
    fn idempotent_split() {
        let q = FiniteMap::new(4, 4, vec![0, 0, 2, 2]);
        assert_eq!(q.after(&q), q);
        let (incl, retr) = q.split_idempotent();
        assert_eq!(retr.after(&incl), FiniteMap::identity(2));
        assert_eq!(incl.after(&retr), q);
    }
}
