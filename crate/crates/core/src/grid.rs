//! Approximate point lookup on a uniform grid.

use std::collections::HashMap;

/// Buckets points by rounding each coordinate to a grid of the given
/// spacing. Lookups probe neighbouring cells for coordinates that sit close
/// to a cell boundary, so two points within a fraction of the spacing are
/// always compared.
#[derive(Debug, Clone)]
pub struct GridIndex {
    spacing: f64,
    cells: HashMap<Vec<i64>, Vec<usize>>,
}

impl GridIndex {
    pub fn new(spacing: f64) -> Self {
        Self {
            spacing,
            cells: HashMap::new(),
        }
    }

    fn key(&self, point: &[f64]) -> Vec<i64> {
        point
            .iter()
            .map(|x| (x / self.spacing).round() as i64)
            .collect()
    }

    pub fn insert(&mut self, point: &[f64], id: usize) {
        let key = self.key(point);
        self.cells.entry(key).or_default().push(id);
    }

    /// Returns the first stored id accepted by `matches` among the cells near
    /// `point`.
    pub fn find(&self, point: &[f64], mut matches: impl FnMut(usize) -> bool) -> Option<usize> {
        let base = self.key(point);
        // Per coordinate: the home cell, plus the adjacent cell when the
        // coordinate lies in the outer quarter of its cell.
        let options: Vec<Vec<i64>> = point
            .iter()
            .zip(&base)
            .map(|(x, &k)| {
                let frac = x / self.spacing - k as f64;
                if frac > 0.25 {
                    vec![k, k + 1]
                } else if frac < -0.25 {
                    vec![k, k - 1]
                } else {
                    vec![k]
                }
            })
            .collect();
        let mut key = base.clone();
        let mut counters = vec![0usize; options.len()];
        loop {
            for (i, opts) in options.iter().enumerate() {
                key[i] = opts[counters[i]];
            }
            if let Some(ids) = self.cells.get(&key) {
                if let Some(&id) = ids.iter().find(|&&id| matches(id)) {
                    return Some(id);
                }
            }
            let mut i = 0;
            loop {
                if i == counters.len() {
                    return None;
                }
                counters[i] += 1;
                if counters[i] < options[i].len() {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_across_cell_boundary() {
        let mut idx = GridIndex::new(1e-7);
        let pts = [[0.15e-6 - 1e-12, 1.0], [3.0, 4.0]];
        for (i, p) in pts.iter().enumerate() {
            idx.insert(p, i);
        }
        let near = [0.15e-6 + 1e-12, 1.0 + 1e-12];
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
        assert_eq!(idx.find(&near, |id| close(&pts[id], &near)), Some(0));
        assert_eq!(idx.find(&[3.0, 4.5], |_| true), None);
    }
}
