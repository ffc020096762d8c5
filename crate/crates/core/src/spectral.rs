//! Exact adjacency determinants and rational null spaces. No floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::graph::{serialize_graph, Format, Graph, VertexSet};
use crate::structure::FlowerDecomposition;

/// A square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl ExactMatrix {
    pub fn adjacency(graph: &Graph) -> Self {
        let n = graph.order();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for &(u, v) in graph.edges() {
            rows[u][v] = BigInt::one();
            rows[v][u] = BigInt::one();
        }
        ExactMatrix { rows }
    }

    /// `None` unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Option<Self> {
        let n = rows.len();
        rows.iter()
            .all(|r| r.len() == n)
            .then_some(ExactMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// Bareiss fraction-free elimination. The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// Reduced row echelon form over the rationals. Returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rational_rows(graph: &Graph, cols: &[usize]) -> Vec<Vec<BigRational>> {
    (0..graph.order())
        .map(|i| {
            cols.iter()
                .map(|&j| {
                    if graph.has_edge(i, j) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Null space basis of a rational matrix, one vector per free column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalBasis {
    pub dim: usize,
    pub vectors: Vec<Vec<BigRational>>,
}

impl Serialize for RationalBasis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        text.serialize(s)
    }
}

pub fn adjacency_determinant(graph: &Graph) -> BigInt {
    ExactMatrix::adjacency(graph).determinant()
}

/// Reduced-echelon null space basis of `A(G)`.
pub fn null_space_basis(graph: &Graph) -> RationalBasis {
    let n = graph.order();
    let cols: Vec<usize> = (0..n).collect();
    let mut m = rational_rows(graph, &cols);
    let pivots = rref(&mut m);
    let mut vectors = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[f] = BigRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        vectors.push(v);
    }
    RationalBasis { dim: n, vectors }
}

/// `rank` of the columns `cols` of `A(G)`.
fn column_rank(graph: &Graph, cols: &[usize]) -> usize {
    let mut m = rational_rows(graph, cols);
    rref(&mut m).len()
}

pub fn nullity(graph: &Graph) -> usize {
    graph.order() - column_rank(graph, &(0..graph.order()).collect::<Vec<_>>())
}

fn as_string<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn as_strings<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .serialize(s)
}

/// Replay data for a failed conjecture check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub conjecture: &'static str,
    /// The graph in graph6.
    pub graph: String,
    /// Vertex sets of the reach sets followed by `B`.
    pub decomposition: Vec<VertexSet>,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminantCheck {
    pub holds: bool,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigInt,
    /// Determinants of the induced parts, reach sets first and `B` last.
    #[serde(serialize_with = "as_strings")]
    pub factors: Vec<BigInt>,
}

impl DeterminantCheck {
    pub fn counterexample(
        &self,
        graph: &Graph,
        decomp: &FlowerDecomposition,
    ) -> Option<Counterexample> {
        (!self.holds).then(|| Counterexample {
            conjecture: "determinant",
            graph: serialize_graph(graph, Format::Graph6),
            decomposition: decomp.part_sets(),
            lhs: self.lhs.clone(),
            rhs: self.rhs.clone(),
        })
    }
}

/// Compares `det A(G)` with the product of the determinants of the parts.
pub fn check_determinant_conjecture(
    graph: &Graph,
    decomp: &FlowerDecomposition,
) -> DeterminantCheck {
    let lhs = adjacency_determinant(graph);
    let factors: Vec<BigInt> = decomp
        .part_sets()
        .iter()
        .map(|p| adjacency_determinant(&graph.induced_subgraph(p).expect("parts lie in V").graph))
        .collect();
    let rhs = factors.iter().fold(BigInt::one(), |acc, f| acc * f);
    DeterminantCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
        factors,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NullspaceVerdict {
    Supported,
    Violated,
    Vacuous,
}

/// Whether the null space of `A(G)` is spanned by vectors each supported
/// inside one part of the flower decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullspaceCheck {
    pub verdict: NullspaceVerdict,
    pub nullity: usize,
    /// Dimension of the null vectors supported in each part, parts then `B`.
    /// Their sum equals `nullity` exactly when the verdict is `supported`.
    pub supported_dims: Vec<usize>,
    /// Nullity of `A(G[P])` for each part, for comparison.
    pub induced_nullities: Vec<usize>,
}

impl NullspaceCheck {
    pub fn counterexample(
        &self,
        graph: &Graph,
        decomp: &FlowerDecomposition,
    ) -> Option<Counterexample> {
        (self.verdict == NullspaceVerdict::Violated).then(|| Counterexample {
            conjecture: "nullspace",
            graph: serialize_graph(graph, Format::Graph6),
            decomposition: decomp.part_sets(),
            lhs: BigInt::from(self.nullity),
            rhs: BigInt::from(self.supported_dims.iter().sum::<usize>()),
        })
    }
}

/// Null vectors supported in a part `P` are the null space of the columns
/// `P` of `A(G)`. Those spaces for distinct parts are independent, so they
/// span the whole null space iff their dimensions add up to the nullity.
pub fn check_nullspace_decomposition(
    graph: &Graph,
    decomp: &FlowerDecomposition,
) -> NullspaceCheck {
    let nullity = nullity(graph);
    let parts = decomp.part_sets();
    let supported_dims: Vec<usize> = parts
        .iter()
        .map(|p| p.len() - column_rank(graph, p.as_slice()))
        .collect();
    let induced_nullities = parts
        .iter()
        .map(|p| self::nullity(&graph.induced_subgraph(p).expect("parts lie in V").graph))
        .collect();
    let verdict = if nullity == 0 {
        NullspaceVerdict::Vacuous
    } else if supported_dims.iter().sum::<usize>() == nullity {
        NullspaceVerdict::Supported
    } else {
        NullspaceVerdict::Violated
    };
    NullspaceCheck {
        verdict,
        nullity,
        supported_dims,
        induced_nullities,
    }
}
