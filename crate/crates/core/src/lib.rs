pub mod field;
pub mod graph;
pub mod poly;

pub use field::Fp;
pub use graph::{Graph, GraphError, VertexSet};
pub use poly::{Ideal, Monomial, MonomialIdeal, PolyError, Polynomial, Ring, Var};
pub mod groebner;
pub mod decomposition;
pub mod linalg;
pub mod betti;
pub mod harness;
