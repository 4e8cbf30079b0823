use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("induced subgraph on the empty vertex set")]
    EmptyVertexSet,
    #[error("edge {{{0}, {1}}} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("closed neighborhood of vertex {0} covers the graph")]
    NeighborhoodCoversGraph(usize),
    #[error("cannot delete the only vertex of a graph")]
    SingleVertex,
    #[error("result would have {0} vertices, limit is {1}")]
    TooLarge(usize, usize),
    #[error("facet count characterization requires a connected graph")]
    Disconnected,
    #[error("graph must have at least 2 vertices")]
    TooSmall,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition does not define a facet subgraph of this graph")]
    NotFacetSubgraph,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("complete multipartite formula needs at least 3 parts, got {0}")]
    TooFewParts(usize),
    #[error("part sizes must be positive")]
    EmptyPart,
    #[error("conjecture bounds need n >= 3, got {0}")]
    BoundsDomain(usize),
    #[error("no closed form applies: {0}")]
    NoClosedForm(String),
    #[error("graph has no apex vertex adjacent to all others")]
    NoApex,
    #[error("generator supports n <= {limit}, got {n}; feed larger n through graph6 input")]
    GeneratorLimit { n: usize, limit: usize },
    #[error("canonical form supports n <= {limit}, got {n}")]
    CanonLimit { n: usize, limit: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
}
