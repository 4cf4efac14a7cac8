use crate::{Error, Result, Vertex};

/// Tournament on `0..n`: every unordered pair carries exactly one arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    // out[u][v] == true iff the arc points from u to v.
    out: Vec<Vec<bool>>,
}

impl Tournament {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut out = vec![vec![false; n]; n];
        let mut count = 0usize;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "arc ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop on vertex {u}")));
            }
            if out[u][v] || out[v][u] {
                return Err(Error::InvalidInstance(format!(
                    "pair {{{u}, {v}}} carries more than one arc"
                )));
            }
            out[u][v] = true;
            count += 1;
        }
        let expected = n * n.saturating_sub(1) / 2;
        if count != expected {
            return Err(Error::InvalidInstance(format!(
                "a tournament on {n} vertices has {expected} arcs, got {count}"
            )));
        }
        Ok(Tournament { n, out })
    }

    /// Transitive tournament with arcs `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Self {
        let mut out = vec![vec![false; n]; n];
        for (u, row) in out.iter_mut().enumerate() {
            for cell in row.iter_mut().skip(u + 1) {
                *cell = true;
            }
        }
        Tournament { n, out }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u][v]
    }

    /// Arcs sorted by `(tail, head)`.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let mut arcs = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.out[u][v] {
                    arcs.push((u, v));
                }
            }
        }
        arcs
    }

    pub fn reverse(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(self.out[u][v]);
        self.out[u][v] = false;
        self.out[v][u] = true;
    }

    /// Number of directed triangles `u -> v -> w -> u` through the arc `(u, v)`.
    pub fn triangles_through(&self, u: Vertex, v: Vertex) -> usize {
        (0..self.n)
            .filter(|&w| w != u && w != v && self.out[v][w] && self.out[w][u])
            .count()
    }

    /// Whether `v` lies on a directed triangle inside the vertex set `alive`.
    pub fn in_triangle(&self, v: Vertex, alive: &[bool]) -> bool {
        for a in 0..self.n {
            if a == v || !alive[a] || !self.out[v][a] {
                continue;
            }
            for b in 0..self.n {
                if b != v && b != a && alive[b] && self.out[a][b] && self.out[b][v] {
                    return true;
                }
            }
        }
        false
    }

    /// Sub-tournament induced by `keep` (ascending), relabelled to `0..keep.len()`.
    pub fn induced(&self, keep: &[Vertex]) -> Tournament {
        let out = keep
            .iter()
            .map(|&u| keep.iter().map(|&v| self.out[u][v]).collect())
            .collect();
        Tournament { n: keep.len(), out }
    }

    /// Whether the digraph left after deleting `removed` arcs is acyclic.
    pub fn is_acyclic_without(&self, removed: impl Fn(Vertex, Vertex) -> bool) -> bool {
        let mut indegree = vec![0usize; self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.out[u][v] && !removed(u, v) {
                    indegree[v] += 1;
                }
            }
        }
        let mut stack: Vec<Vertex> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for v in 0..self.n {
                if self.out[u][v] && !removed(u, v) {
                    indegree[v] -= 1;
                    if indegree[v] == 0 {
                        stack.push(v);
                    }
                }
            }
        }
        seen == self.n
    }
}
