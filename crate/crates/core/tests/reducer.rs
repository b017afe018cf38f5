//! Configuration detection, reduction and lifting.

mod common;

use std::collections::BTreeSet;

use common::*;
use strongcolor::generate::named_instance;
use strongcolor::graph::PlaneMultigraph;
use strongcolor::reduce::{
    apply_reduction, color_graph, color_graph_observed, find_configuration, kind_present, lift_and_extend,
    ConfigKind, Configuration, ReduceError, Reduced, BASE_CASE_VERTICES,
};

fn named(name: &str) -> EdgeList {
    edge_list(&named_instance(name).unwrap())
}

/// One instance per kind on which that kind is detected first.
fn targeted() -> Vec<(ConfigKind, EdgeList)> {
    use ConfigKind::*;
    let (k4, cube, c5, dod, c60) = (
        named("k4"),
        named("cube"),
        named("c5"),
        named("dodecahedron"),
        c60(),
    );
    vec![
        (Disconnected, disjoint_union(&k4, &k4)),
        (ParallelEdge, named("doubled_edge_path")),
        (DegreeLeqOne, vec![(0, 1), (1, 2)]),
        (CutEdge, bridge_join(&c5, 0, &c5, 0)),
        (NonAdjacentTwoEdgeCut, named("theta")),
        (TriangleWith2Vertex, vec![(0, 1), (1, 2), (2, 0)]),
        (Triangle, k4),
        (FourCycleWith2Vertex, cube[1..].to_vec()),
        (FourCycle, cube),
        (TwoVerticesAtDistance1or2, subdivide(&subdivide(&c60, 0), 30)),
        (TwoVertexOn5Face, dod[1..].to_vec()),
        (TwoVerticesAtDistance3, subdivide(&subdivide(&c60, 0), 1)),
        (FaceBoundaryDistance4Pair, subdivide(&subdivide(&c60, 0), 44)),
        (TwoVertexOn6Face, subdivide(&dod, 0)),
        (TwoVertexOn7Face, subdivide(&c60, 0)),
        (AdjacentFiveFiveFaces, dod),
        (FiveSixAdjacentFaces, c60),
    ]
}

fn assert_strong(g: &PlaneMultigraph) {
    let (c, _) = color_graph(g).unwrap();
    let colors: Vec<u8> = c.colors().iter().map(|c| c.unwrap()).collect();
    assert!(is_strong(&edge_list(g), &colors, 9));
}

#[test]
fn every_kind_has_a_targeted_instance() {
    let cases = targeted();
    assert_eq!(cases.iter().map(|(k, _)| *k).collect::<Vec<_>>(), ConfigKind::ALL);
    for (kind, edges) in cases {
        let g = embed(&edges);
        let found = find_configuration(&g).map(|c| c.kind());
        assert_eq!(found, Some(kind));
        assert_eq!(kind_present(&g, kind).map(|c| c.kind()), Some(kind));
        for earlier in ConfigKind::ALL.iter().take_while(|&&k| k != kind) {
            assert!(
                kind_present(&g, *earlier).is_none(),
                "{kind}: {earlier} also present"
            );
        }
        let (c, trace) = color_graph(&g).unwrap();
        if g.vertex_count() > BASE_CASE_VERTICES {
            assert_eq!(trace.entries[0].kind, kind);
        } else {
            assert!(trace.entries.is_empty() && trace.base_cases == 1);
        }
        let colors: Vec<u8> = c.colors().iter().map(|c| c.unwrap()).collect();
        assert!(is_strong(&edges, &colors, 9), "{kind}");
    }
}

fn size(g: &PlaneMultigraph) -> usize {
    g.vertex_count() + g.edge_count()
}

fn has_parallel(edges: &[(usize, usize)]) -> bool {
    let mut seen = BTreeSet::new();
    !edges.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
}

fn adjacency(edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); vertex_count(edges)];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    adj
}

fn has_triangle(edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(edges);
    edges
        .iter()
        .any(|&(a, b)| adj[a].intersection(&adj[b]).next().is_some())
}

fn has_four_cycle(edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(edges);
    // two distinct vertices with two common neighbours
    (0..adj.len()).any(|a| (a + 1..adj.len()).any(|c| adj[a].intersection(&adj[c]).count() >= 2))
}

fn disconnects(n: usize, edges: &[(usize, usize)], drop: &[usize]) -> bool {
    let rest: EdgeList = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &p)| p)
        .collect();
    components_of(n, &rest) > components_of(n, edges)
}

fn has_nonadjacent_two_cut(n: usize, edges: &[(usize, usize)]) -> bool {
    (0..edges.len()).any(|e| {
        (e + 1..edges.len()).any(|f| {
            let ((a, b), (c, d)) = (edges[e], edges[f]);
            a != c && a != d && b != c && b != d && disconnects(n, edges, &[e, f])
        })
    })
}

/// Checks, without the detector, that no kind earlier than `kind` among
/// those with a simple definition is present.
fn check_earlier_absent(g: &PlaneMultigraph, kind: ConfigKind) {
    use ConfigKind::*;
    let edges = edge_list(g);
    let n = g.vertex_count();
    let two_vertex = (0..n).any(|v| g.degree(v) == 2);
    if kind > Disconnected {
        assert_eq!(components_of(n, &edges), 1);
    }
    if kind > ParallelEdge {
        assert!(!has_parallel(&edges));
    }
    if kind > DegreeLeqOne {
        assert!((0..n).all(|v| g.degree(v) >= 2));
    }
    if kind > CutEdge {
        assert!((0..edges.len()).all(|e| !disconnects(n, &edges, &[e])));
    }
    if kind > NonAdjacentTwoEdgeCut && edges.len() <= 60 {
        assert!(!has_nonadjacent_two_cut(n, &edges));
    }
    if kind > Triangle {
        assert!(!has_triangle(&edges));
    }
    if kind > FourCycle {
        assert!(!has_four_cycle(&edges));
    }
    if kind > TwoVertexOn7Face {
        assert!(!two_vertex);
    }
}

#[test]
fn detection_order_and_progress_on_recursion_graphs() {
    let mut observed: Vec<PlaneMultigraph> = Vec::new();
    for (_, g) in corpus(120) {
        color_graph_observed(&g, &mut |h, _| observed.push(h.clone())).unwrap();
    }
    for (_, edges) in targeted() {
        color_graph_observed(&embed(&edges), &mut |h, _| observed.push(h.clone())).unwrap();
    }
    let mut kinds = BTreeSet::new();
    for g in observed.iter().filter(|g| g.edge_count() > 0) {
        let cfg = find_configuration(g).expect("nonempty graph without a configuration");
        let kind = cfg.kind();
        kinds.insert(kind);
        check_earlier_absent(g, kind);
        let step = apply_reduction(g, &cfg).unwrap();
        match &step.reduced {
            Reduced::Single { reduced, .. } => {
                assert!(size(&reduced.graph) < size(g), "{kind} did not shrink")
            }
            Reduced::Split { parts } => {
                assert!(parts.len() >= 2);
                assert!(
                    parts.iter().all(|p| size(&p.graph) < size(g)),
                    "{kind} part did not shrink"
                );
            }
        }
    }
    assert_eq!(kinds.len(), ConfigKind::ALL.len(), "kinds seen: {kinds:?}");
}

/// Two adjacent pentagons whose far vertices x2 and x6 share the neighbour
/// y = 8. In a graph that reaches the five-five kind this cannot happen
/// (one side of the two 6-cycles through y would be cut off by two edges),
/// so the instance keeps earlier kinds and calls the reduction directly.
#[test]
fn five_five_with_shared_far_neighbour() {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 0),
        (8, 2),
        (8, 6),
        (3, 9),
        (5, 10),
        (8, 11),
        (9, 10),
        (10, 11),
        (11, 9),
        (1, 12),
        (7, 13),
        (12, 13),
    ];
    let g = embed(&edges);
    let cfg = kind_present(&g, ConfigKind::AdjacentFiveFiveFaces).unwrap();
    let Configuration::AdjacentFiveFiveFaces { y, .. } = &cfg else {
        unreachable!()
    };
    assert_eq!((y[2], y[6]), (8, 8));
    let step = apply_reduction(&g, &cfg).unwrap();
    let subs: Vec<_> = match &step.reduced {
        Reduced::Single { reduced, .. } => vec![color_graph(&reduced.graph).unwrap().0],
        Reduced::Split { parts } => parts.iter().map(|p| color_graph(&p.graph).unwrap().0).collect(),
    };
    let (c, _) = lift_and_extend(&g, &step, &subs).unwrap();
    let colors: Vec<u8> = c.colors().iter().map(|c| c.unwrap()).collect();
    assert!(is_strong(&edges, &colors, 9));
}

#[test]
fn edgeless_and_tiny_graphs() {
    assert_strong(&embed(&[]));
    assert!(find_configuration(&embed(&[])).is_none());
    assert_strong(&PlaneMultigraph::empty());
    assert_strong(&embed(&[(0, 1)]));
    assert_strong(&embed(&[(0, 1), (0, 1), (0, 1)]));
}

#[test]
fn named_instances_color() {
    for name in strongcolor::generate::NAMED_INSTANCES {
        assert_strong(&named_instance(name).unwrap());
    }
}

#[test]
fn rejects_degree_four() {
    let k5: EdgeList = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let g = PlaneMultigraph::new_unchecked_genus(5, k5.clone(), adjacency_rotations(5, &k5)).unwrap();
    assert!(matches!(color_graph(&g), Err(ReduceError::InputInvalid(_))));
}

fn adjacency_rotations(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut rot = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        rot[a].push(e);
        rot[b].push(e);
    }
    rot
}
