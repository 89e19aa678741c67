use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{BettiTable, Convention};

/// Largest ambient dimension accepted by the graph formula (it sums over
/// all vertex subsets of a `2n`-vertex graph).
pub const GRAPH_MAX_VARS: usize = 10;

/// A vertex `p` or `p'` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Plain(usize),
    Primed(usize),
}

/// Graph on `{1..n} ∪ {1'..n'}` attached to a quadratic monomial ideal.
///
/// Vertex `p` has index `p - 1`, vertex `p'` has index `n + p - 1`;
/// `adjacency[v]` is a bitmask of neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarGraph {
    n: usize,
    adjacency: Vec<u32>,
}

impl PolarGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    fn index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Plain(p) => p - 1,
            Vertex::Primed(p) => self.n + p - 1,
        }
    }

    fn vertex(&self, k: usize) -> Vertex {
        if k < self.n {
            Vertex::Plain(k + 1)
        } else {
            Vertex::Primed(k - self.n + 1)
        }
    }

    fn connect(&mut self, a: Vertex, b: Vertex) {
        let (a, b) = (self.index(a), self.index(b));
        self.adjacency[a] |= 1 << b;
        self.adjacency[b] |= 1 << a;
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[self.index(a)] >> self.index(b) & 1 == 1
    }

    /// Edges as ordered vertex pairs, each listed once.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for b in a + 1..self.vertex_count() {
                if self.adjacency[a] >> b & 1 == 1 {
                    out.push((self.vertex(a), self.vertex(b)));
                }
            }
        }
        out
    }

    /// Connected components of the subgraph induced on the vertex mask.
    pub fn components(&self, mask: u32) -> u32 {
        let mut left = mask;
        let mut count = 0;
        while left != 0 {
            count += 1;
            let mut frontier = left & left.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adjacency[v] & mask & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            left &= !seen;
        }
        count
    }
}

fn check_quadratic(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.generators().iter().any(|g| g.degree() != 2) {
        return Err(Error::UnsupportedIdeal("graph formula needs an ideal generated by quadrics".into()));
    }
    if ideal.n() > GRAPH_MAX_VARS {
        return Err(Error::UnsupportedIdeal(format!(
            "graph formula is limited to {GRAPH_MAX_VARS} variables"
        )));
    }
    Ok(())
}

/// Edges: `{p,q}` for `x_p x_q` not in `L`; `{p,q'}` for `p != q`;
/// `{p,p'}` for `x_p^2` not in `L`; `{p',q'}` for `p != q`.
pub fn gamma_graph(ideal: &MonomialIdeal) -> Result<PolarGraph> {
    check_quadratic(ideal)?;
    let n = ideal.n();
    let mut g = PolarGraph { n, adjacency: vec![0; 2 * n] };
    for p in 1..=n {
        for q in 1..=n {
            if p < q && !ideal.contains_unchecked(&Monomial::quadric(n, p, q)) {
                g.connect(Vertex::Plain(p), Vertex::Plain(q));
            }
            if p != q {
                g.connect(Vertex::Plain(p), Vertex::Primed(q));
            }
            if p < q {
                g.connect(Vertex::Primed(p), Vertex::Primed(q));
            }
        }
        if !ideal.contains_unchecked(&Monomial::quadric(n, p, p)) {
            g.connect(Vertex::Plain(p), Vertex::Primed(p));
        }
    }
    Ok(g)
}

/// `beta_{k,k+2}` for `k = 0..=2n-2`: the sum over vertex sets `W` with
/// `|W| = k + 2` of (components of the induced subgraph) - 1.
pub fn betti_quadratic_graph(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    let g = gamma_graph(ideal)?;
    let v = g.vertex_count();
    let mut strand = vec![0u64; v.saturating_sub(1)];
    for mask in 0u32..(1u32 << v) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        strand[size - 2] += u64::from(g.components(mask) - 1);
    }
    while strand.last() == Some(&0) {
        strand.pop();
    }
    Ok(strand)
}

/// The graph strand as a table.
pub fn graph_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut table = BettiTable::new(ideal.n(), Convention::Ideal);
    for (k, v) in betti_quadratic_graph(ideal)?.into_iter().enumerate() {
        table.add(k, k as u32 + 2, v);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Vertex::{Plain, Primed};

    #[test]
    fn edge_classes() {
        let g = gamma_graph(&MonomialIdeal::parse(1, "x1^2").unwrap()).unwrap();
        assert!(g.edges().is_empty());
        let g = gamma_graph(&MonomialIdeal::parse(2, "x1^2, x1*x2").unwrap()).unwrap();
        assert_eq!(
            g.edges(),
            vec![(Plain(1), Primed(2)), (Plain(2), Primed(1)), (Plain(2), Primed(2)), (Primed(1), Primed(2))]
        );
        let g = gamma_graph(&MonomialIdeal::maximal_power(3, 2)).unwrap();
        assert!(g.edges().iter().all(|e| matches!(e, (Plain(p), Primed(q)) | (Primed(p), Primed(q)) if p != q)));
    }

    #[test]
    fn strands() {
        assert_eq!(betti_quadratic_graph(&MonomialIdeal::parse(1, "x1^2").unwrap()).unwrap(), vec![1]);
        assert_eq!(betti_quadratic_graph(&MonomialIdeal::parse(2, "x1^2, x1*x2").unwrap()).unwrap(), vec![2, 1]);
        assert!(gamma_graph(&MonomialIdeal::parse(2, "x1^3").unwrap()).is_err());
    }
}
