use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, Hypergraph, Line, PointSet, Tournament};
use crate::{ElementId, Error, Result, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Vertex Cover: domain is the vertex set.
    Vc,
    /// d-Hitting Set: domain is the vertex set of the hypergraph.
    Hs,
    /// Point Line Cover: domain is a set of lines.
    Plc,
    /// Feedback Arc Set in Tournaments: domain is a set of arcs.
    Fast,
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vc" => Ok(ProblemKind::Vc),
            "hs" => Ok(ProblemKind::Hs),
            "plc" => Ok(ProblemKind::Plc),
            "fast" => Ok(ProblemKind::Fast),
            other => Err(Error::InvalidArgument(format!("unknown problem `{other}`"))),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemKind::Vc => "vc",
            ProblemKind::Hs => "hs",
            ProblemKind::Plc => "plc",
            ProblemKind::Fast => "fast",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcRecord {
    /// Id of the arc's vertex pair in the input tournament.
    pub id: ElementId,
    /// Deletable arcs form the domain; the others are fixed.
    pub deletable: bool,
}

/// A tournament in which only some arcs may be deleted.
///
/// Input instances have every arc deletable. Kernelization reverses forced
/// arcs (which then stay fixed) and recovery reintroduces vertices whose
/// incident arcs are fixed unless explicitly recovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcInstance {
    tournament: Tournament,
    vertex_labels: Vec<usize>,
    arcs: BTreeMap<(Vertex, Vertex), ArcRecord>,
    reversed: BTreeSet<ElementId>,
}

impl ArcInstance {
    pub fn new(
        tournament: Tournament,
        vertex_labels: Vec<usize>,
        arcs: BTreeMap<(Vertex, Vertex), ArcRecord>,
        reversed: BTreeSet<ElementId>,
    ) -> Result<Self> {
        if vertex_labels.len() != tournament.n() || !strictly_ascending(&vertex_labels) {
            return Err(Error::InvalidInstance(
                "vertex labels must be strictly ascending, one per vertex".into(),
            ));
        }
        let keys: Vec<_> = arcs.keys().copied().collect();
        if keys != tournament.arcs() {
            return Err(Error::InvalidInstance(
                "arc records do not match the tournament's arcs".into(),
            ));
        }
        let ids: BTreeSet<_> = arcs.values().map(|r| r.id).collect();
        if ids.len() != arcs.len() {
            return Err(Error::InvalidInstance("arc ids are not unique".into()));
        }
        Ok(ArcInstance { tournament, vertex_labels, arcs, reversed })
    }

    pub fn tournament(&self) -> &Tournament {
        &self.tournament
    }

    pub fn vertex_labels(&self) -> &[usize] {
        &self.vertex_labels
    }

    pub fn arcs(&self) -> &BTreeMap<(Vertex, Vertex), ArcRecord> {
        &self.arcs
    }

    /// Ids of input arcs that kernelization reversed.
    pub fn reversed(&self) -> &BTreeSet<ElementId> {
        &self.reversed
    }

    /// Deletable arcs sorted by id.
    pub fn deletable_arcs(&self) -> Vec<((Vertex, Vertex), ElementId)> {
        let mut list: Vec<_> = self
            .arcs
            .iter()
            .filter(|(_, r)| r.deletable)
            .map(|(&arc, r)| (arc, r.id))
            .collect();
        list.sort_by_key(|&(_, id)| id);
        list
    }
}

/// Size measures used by kernel bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSize {
    /// Vertices (VC, HS, FAST) or points (PLC).
    pub primary: usize,
    /// Number of domain elements.
    pub domain: usize,
}

/// An instance of one of the four supported problems.
///
/// Every domain element carries a stable [`ElementId`]; local structures are
/// indexed from zero with ids ascending, so local order is domain order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemInstance {
    VertexCover { graph: Graph, labels: Vec<ElementId> },
    HittingSet { hypergraph: Hypergraph, labels: Vec<ElementId> },
    PointLineCover { points: PointSet, lines: Vec<Line>, line_ids: Vec<ElementId> },
    FeedbackArcSet(ArcInstance),
}

fn strictly_ascending(ids: &[usize]) -> bool {
    ids.windows(2).all(|w| w[0] < w[1])
}

impl ProblemInstance {
    pub fn vertex_cover(graph: Graph) -> Self {
        let labels = graph.vertices().collect();
        ProblemInstance::VertexCover { graph, labels }
    }

    pub fn hitting_set(hypergraph: Hypergraph) -> Self {
        let labels = (0..hypergraph.n()).collect();
        ProblemInstance::HittingSet { hypergraph, labels }
    }

    /// Point Line Cover over `L(P)`, with line ids assigned in sorted order.
    pub fn point_line_cover(points: PointSet) -> Result<Self> {
        let lines = points.lines()?;
        let line_ids = (0..lines.len()).collect();
        Ok(ProblemInstance::PointLineCover { points, lines, line_ids })
    }

    /// FAST with every arc deletable; arc ids follow `(tail, head)` order.
    pub fn feedback_arc_set(tournament: Tournament) -> Self {
        let arcs = tournament
            .arcs()
            .into_iter()
            .enumerate()
            .map(|(id, arc)| (arc, ArcRecord { id, deletable: true }))
            .collect();
        let vertex_labels = (0..tournament.n()).collect();
        ProblemInstance::FeedbackArcSet(ArcInstance {
            tournament,
            vertex_labels,
            arcs,
            reversed: BTreeSet::new(),
        })
    }

    pub fn labeled_vertex_cover(graph: Graph, labels: Vec<ElementId>) -> Result<Self> {
        if labels.len() != graph.n() || !strictly_ascending(&labels) {
            return Err(Error::InvalidInstance("labels must be strictly ascending".into()));
        }
        Ok(ProblemInstance::VertexCover { graph, labels })
    }

    pub fn labeled_hitting_set(hypergraph: Hypergraph, labels: Vec<ElementId>) -> Result<Self> {
        if labels.len() != hypergraph.n() || !strictly_ascending(&labels) {
            return Err(Error::InvalidInstance("labels must be strictly ascending".into()));
        }
        Ok(ProblemInstance::HittingSet { hypergraph, labels })
    }

    pub fn labeled_point_line_cover(
        points: PointSet,
        lines: Vec<Line>,
        line_ids: Vec<ElementId>,
    ) -> Result<Self> {
        if lines.len() != line_ids.len() || !strictly_ascending(&line_ids) {
            return Err(Error::InvalidInstance("line ids must be strictly ascending".into()));
        }
        Ok(ProblemInstance::PointLineCover { points, lines, line_ids })
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemInstance::VertexCover { .. } => ProblemKind::Vc,
            ProblemInstance::HittingSet { .. } => ProblemKind::Hs,
            ProblemInstance::PointLineCover { .. } => ProblemKind::Plc,
            ProblemInstance::FeedbackArcSet(_) => ProblemKind::Fast,
        }
    }

    /// Domain element ids, ascending.
    pub fn domain(&self) -> Vec<ElementId> {
        match self {
            ProblemInstance::VertexCover { labels, .. }
            | ProblemInstance::HittingSet { labels, .. } => labels.clone(),
            ProblemInstance::PointLineCover { line_ids, .. } => line_ids.clone(),
            ProblemInstance::FeedbackArcSet(arcs) => {
                arcs.deletable_arcs().into_iter().map(|(_, id)| id).collect()
            }
        }
    }

    pub fn domain_len(&self) -> usize {
        match self {
            ProblemInstance::VertexCover { labels, .. }
            | ProblemInstance::HittingSet { labels, .. } => labels.len(),
            ProblemInstance::PointLineCover { line_ids, .. } => line_ids.len(),
            ProblemInstance::FeedbackArcSet(arcs) => {
                arcs.arcs.values().filter(|r| r.deletable).count()
            }
        }
    }

    pub fn size(&self) -> InstanceSize {
        let primary = match self {
            ProblemInstance::VertexCover { graph, .. } => graph.n(),
            ProblemInstance::HittingSet { hypergraph, .. } => hypergraph.n(),
            ProblemInstance::PointLineCover { points, .. } => points.len(),
            ProblemInstance::FeedbackArcSet(arcs) => arcs.tournament.n(),
        };
        InstanceSize { primary, domain: self.domain_len() }
    }

    /// Whether `set` (given by element ids) is a solution, ignoring any size budget.
    /// Ids outside the domain make the set invalid.
    pub fn is_solution(&self, set: &BTreeSet<ElementId>) -> bool {
        let domain: BTreeSet<ElementId> = self.domain().into_iter().collect();
        if !set.is_subset(&domain) {
            return false;
        }
        match self {
            ProblemInstance::VertexCover { graph, labels } => graph
                .edges()
                .all(|(u, v)| set.contains(&labels[u]) || set.contains(&labels[v])),
            ProblemInstance::HittingSet { hypergraph, labels } => hypergraph
                .edges()
                .iter()
                .all(|e| e.iter().any(|&v| set.contains(&labels[v]))),
            ProblemInstance::PointLineCover { points, lines, line_ids } => {
                let chosen: Vec<&Line> = lines
                    .iter()
                    .zip(line_ids)
                    .filter(|(_, id)| set.contains(id))
                    .map(|(l, _)| l)
                    .collect();
                points
                    .points()
                    .iter()
                    .all(|&p| chosen.iter().any(|l| l.contains(p)))
            }
            ProblemInstance::FeedbackArcSet(arcs) => arcs.tournament.is_acyclic_without(|u, v| {
                arcs.arcs
                    .get(&(u, v))
                    .is_some_and(|r| r.deletable && set.contains(&r.id))
            }),
        }
    }
}

/// Domain of an instance in deterministic (ascending id) order.
pub fn enumerate_domain(instance: &ProblemInstance) -> Vec<ElementId> {
    instance.domain()
}
