//! Graph immersions and the free inverse monoid.
//!
//! - [`word`]: labels and words over `X ∪ X⁻¹`.
//! - [`graph`]: labeled Serre graphs, morphisms, folding, path lifting.
//! - [`munn`]: Munn trees and the word problem in `FIM(X)`.
//! - [`submonoid`]: closed inverse submonoids as pointed coset graphs.
//! - [`deck`]: deck transformations of immersions and `N(H)/H`.
//! - [`cover`]: cover predicates, quotients and completion to covers.
//! - [`cli`]: the `immersion` command-line front end.

pub mod cli;
pub mod cover;
pub mod deck;
pub mod graph;
pub mod munn;
pub mod submonoid;
pub mod word;

pub use graph::{
    based_isomorphic, fold, induced_morphism, lift_maximal, parse_graph, write_graph, Dart,
    EdgeId, GraphError, GraphFile, GraphMorphism, LabeledGraph, LocalClass, PathWitness,
    VertexId,
};
pub use munn::{fim_equal, munn_element, nat_leq, MunnElement};
pub use submonoid::{CosetGraph, ImmersionPair};
pub use word::{Label, Letter, Word};
