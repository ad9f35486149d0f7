use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::OracleError;

/// Largest number of hexagon rows accepted by the matching counter; the
/// transfer state is a bitmask over a window of roughly `3m + 6` vertices.
pub const KEKULE_MAX_M: usize = 30;

/// The benzenoid strip `Z(n, m)`: `n` columns of `m` hexagons, odd columns
/// sitting half a hexagon lower than even ones.
///
/// Column `i` is centred at `x = 3(i-1)`. Its hexagon `j` (from 0) has base
/// level `L = 2j+1` (odd `i`) or `2j+2` (even `i`) and corners
/// `(x±1, L)`, `(x±2, L+1)`, `(x±1, L+2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexGrid {
    pub n: usize,
    pub m: usize,
    /// Sorted by `(x, y)`.
    pub vertices: Vec<(i64, i64)>,
    /// Index pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl HexGrid {
    pub fn new(n: usize, m: usize) -> Self {
        let mut coord_edges = Vec::new();
        for i in 1..=n {
            let x = 3 * (i as i64 - 1);
            let base = if i % 2 == 1 { 1 } else { 2 };
            for j in 0..m as i64 {
                let l = base + 2 * j;
                let ring = [(x - 1, l), (x + 1, l), (x + 2, l + 1), (x + 1, l + 2), (x - 1, l + 2), (x - 2, l + 1)];
                for k in 0..6 {
                    let (a, b) = (ring[k], ring[(k + 1) % 6]);
                    coord_edges.push(if a < b { (a, b) } else { (b, a) });
                }
            }
        }
        coord_edges.sort();
        coord_edges.dedup();
        let mut vertices: Vec<(i64, i64)> = coord_edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort();
        vertices.dedup();
        let index: HashMap<(i64, i64), usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges: Vec<(usize, usize)> =
            coord_edges.iter().map(|(a, b)| (index[a], index[b])).map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort();
        Self { n, m, vertices, edges }
    }

    /// Edges as coordinate pairs, each pair sorted, the list sorted.
    pub fn coordinate_edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        let mut out: Vec<_> = self.edges.iter().map(|&(a, b)| (self.vertices[a], self.vertices[b])).collect();
        out.sort();
        out
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut color: Vec<Option<bool>> = vec![None; adj.len()];
        for start in 0..adj.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("queued vertices are colored");
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

fn check_size(n: usize, m: usize) -> Result<(), OracleError> {
    if m > KEKULE_MAX_M {
        return Err(OracleError::TooLarge { n, m, limit: format!("matching counter accepts m <= {KEKULE_MAX_M}") });
    }
    Ok(())
}

/// Number of perfect matchings of `Z(n, m)`. Vertices are taken in `(x, y)`
/// order; the state records which upcoming vertices are already matched.
pub fn count_kekule_matchings(n: usize, m: usize) -> Result<BigInt, OracleError> {
    check_size(n, m)?;
    let grid = HexGrid::new(n, m);
    let adj = grid.neighbors();
    let mut states: HashMap<u128, BigInt> = HashMap::from([(0, BigInt::from(1))]);
    for (v, nbrs) in adj.iter().enumerate() {
        let mut next: HashMap<u128, BigInt> = HashMap::new();
        for (state, ways) in states {
            if state & 1 == 1 {
                *next.entry(state >> 1).or_insert_with(BigInt::zero) += ways;
                continue;
            }
            for &w in nbrs.iter().filter(|&&w| w > v) {
                let d = w - v;
                assert!(d < 128, "matching window exceeded; KEKULE_MAX_M is too generous");
                if state >> d & 1 == 0 {
                    *next.entry((state | 1 << d) >> 1).or_insert_with(BigInt::zero) += &ways;
                }
            }
        }
        states = next;
    }
    Ok(states.remove(&0).unwrap_or_default())
}

/// Every perfect matching as a sorted list of edge indices, by backtracking.
/// Exponential; meant for small grids.
pub fn enumerate_matchings(grid: &HexGrid) -> Vec<Vec<usize>> {
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); grid.vertices.len()];
    for (e, &(a, b)) in grid.edges.iter().enumerate() {
        incident[a].push((e, b));
        incident[b].push((e, a));
    }
    fn go(
        v: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        incident: &[Vec<(usize, usize)>],
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(v) = (v..used.len()).find(|&u| !used[u]) else {
            let mut m = chosen.clone();
            m.sort();
            out.push(m);
            return;
        };
        used[v] = true;
        for &(e, w) in &incident[v] {
            if !used[w] {
                used[w] = true;
                chosen.push(e);
                go(v + 1, used, chosen, incident, out);
                chosen.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    go(0, &mut vec![false; grid.vertices.len()], &mut Vec::new(), &incident, &mut out);
    out
}

/// Height of the single horizontal matched edge in each column, measured in
/// hexagons from the bottom of that column. `None` if some column has no
/// such edge or more than one.
pub fn matching_heights(grid: &HexGrid, matching: &[usize]) -> Option<Vec<usize>> {
    let mut per_column: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for &e in matching {
        let (a, b) = grid.edges[e];
        let ((xa, ya), (xb, yb)) = (grid.vertices[a], grid.vertices[b]);
        if ya == yb {
            let column = ((xa + xb) / 2 / 3) as usize + 1;
            per_column.entry(column).or_default().push(ya);
        }
    }
    (1..=grid.n)
        .map(|i| match per_column.get(&i).map(Vec::as_slice) {
            Some(&[y]) => {
                let base = if i % 2 == 1 { 1 } else { 2 };
                Some(((y - base) / 2) as usize)
            }
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::count_order_ideals;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        assert_eq!(count_kekule_matchings(2, 1).unwrap(), BigInt::from(3));
        assert_eq!(count_kekule_matchings(3, 2).unwrap(), BigInt::from(14));
        assert_eq!(count_kekule_matchings(7, 5).unwrap(), BigInt::from(26585));
        for m in 0..6 {
            assert_eq!(count_kekule_matchings(1, m).unwrap(), BigInt::from(m + 1));
        }
        assert!(matches!(count_kekule_matchings(2, KEKULE_MAX_M + 1), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn enumeration_agrees_with_transfer() {
        for n in 1..=4 {
            for m in 1..=3 {
                let grid = HexGrid::new(n, m);
                assert!(grid.is_bipartite());
                assert_eq!(BigInt::from(enumerate_matchings(&grid).len()), count_kekule_matchings(n, m).unwrap());
            }
        }
    }

    #[test]
    fn heights_biject_onto_column_tuples() {
        for n in 1..=5 {
            for m in 1..=3 {
                let grid = HexGrid::new(n, m);
                let heights: Vec<Vec<usize>> = enumerate_matchings(&grid)
                    .iter()
                    .map(|mt| matching_heights(&grid, mt).expect("one per column"))
                    .collect();
                let distinct: HashSet<&Vec<usize>> = heights.iter().collect();
                assert_eq!(distinct.len(), heights.len(), "injective n={n} m={m}");
                for a in &heights {
                    assert!(a.iter().all(|&h| h <= m));
                    assert!(a.windows(2).enumerate().all(|(i, w)| if i % 2 == 0 {
                        w[0] <= w[1]
                    } else {
                        w[0] >= w[1]
                    }));
                }
                assert_eq!(BigInt::from(heights.len()), count_order_ideals(n, m), "onto n={n} m={m}");
            }
        }
    }

    #[test]
    fn vertex_and_edge_totals() {
        // a single column of m hexagons is a polyacene: 4m + 2 vertices, 5m + 1 edges
        let g = HexGrid::new(1, 4);
        assert_eq!((g.vertices.len(), g.edges.len()), (18, 21));
        assert!(HexGrid::new(3, 0).vertices.is_empty());
    }
}
