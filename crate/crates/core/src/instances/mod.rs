//! Problem instances, their solution domains, and the text formats they are
//! read from and written to.

mod format;
mod graph;
mod hypergraph;
mod points;
mod problem;
mod tournament;

pub use format::{
    parse_graph, parse_hypergraph, parse_instance, parse_points, parse_tournament, write_graph,
    write_hypergraph, write_instance, write_points, write_tournament,
};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use points::{canonical_line, Line, Point, PointSet};
pub use problem::{enumerate_domain, ArcInstance, ArcRecord, InstanceSize, ProblemInstance, ProblemKind};
pub use tournament::Tournament;
