//! Invariants over random instances.

mod common;

use common::*;
use proptest::prelude::*;
use strongcolor::coloring::{available_colors, PartialColoring};
use strongcolor::discharge::charges;
use strongcolor::generate::{generate, GenSpec};
use strongcolor::graph::{boundary_distance, bridges, PlaneMultigraph};
use strongcolor::io::{parse_coloring, parse_graph, serialize_coloring, serialize_edge_list, serialize_pmg};
use strongcolor::reduce::color_graph;

fn spec() -> impl Strategy<Value = GenSpec> {
    (3usize..120, any::<u64>(), 0.0f64..=0.6, any::<bool>()).prop_map(|(n, seed, p2, par)| GenSpec {
        target_vertices: n,
        seed,
        two_vertex_fraction: p2,
        allow_parallel: par,
    })
}

fn graph() -> impl Strategy<Value = PlaneMultigraph> {
    spec().prop_map(|s| generate(&s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generator_output_is_valid(s in spec()) {
        let g = generate(&s).unwrap();
        prop_assert_eq!(g.vertex_count(), s.target_vertices);
        prop_assert!(g.is_subcubic());
        prop_assert!(g.is_connected());
        prop_assert!(bridges(&g).is_empty());
        prop_assert!((0..g.vertex_count()).all(|v| g.degree(v) >= 2));
        prop_assert!(g.edges().iter().all(|&(a, b)| a != b));
        prop_assert!(s.allow_parallel || !g.has_parallel_edges());
        g.check_planar_rotation().unwrap();
        prop_assert_eq!(generate(&s).unwrap(), g);
    }

    #[test]
    fn euler_and_face_lengths(g in graph()) {
        let faces = g.trace_faces();
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, faces.len() as i64);
        prop_assert_eq!(v - e + f, 2);
        prop_assert_eq!(faces.iter().map(|f| f.len()).sum::<usize>(), 2 * g.edge_count());
        // every edge lies on exactly two face sides
        let mut sides = vec![0; g.edge_count()];
        for face in &faces {
            for e in face.edges() {
                sides[e] += 1;
            }
        }
        prop_assert!(sides.iter().all(|&s| s == 2));
    }

    #[test]
    fn charge_is_conserved(g in graph()) {
        let c = charges(&g).unwrap();
        prop_assert_eq!(c.total_initial(), -60);
        prop_assert_eq!(c.total_final(), c.total_initial());
        prop_assert!(c.vertex_final.iter().all(|&x| x >= 0));
    }

    #[test]
    fn boundary_distance_is_a_metric_on_the_walk(g in graph(), pick in any::<prop::sample::Index>()) {
        let faces = g.trace_faces();
        let face = &faces[pick.index(faces.len())];
        let walk = face.vertices();
        let half = face.len() / 2;
        for &u in &walk {
            prop_assert_eq!(boundary_distance(face, u, u).unwrap(), 0);
            for &v in &walk {
                let d = boundary_distance(face, u, v).unwrap();
                prop_assert_eq!(d, boundary_distance(face, v, u).unwrap());
                prop_assert!(d <= half);
                if u != v {
                    prop_assert!(d >= 1);
                }
            }
        }
        let outside = (0..g.vertex_count()).find(|v| !walk.contains(v));
        if let Some(x) = outside {
            prop_assert!(boundary_distance(face, walk[0], x).is_err());
        }
    }

    #[test]
    fn pmg_and_edge_list_round_trip(g in graph()) {
        let text = serialize_pmg(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        let h = parse_graph(&serialize_edge_list(&g)).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        h.check_planar_rotation().unwrap();
    }

    #[test]
    fn coloring_round_trips(colors in prop::collection::vec(prop::option::of(1u8..=9), 0..40)) {
        let c = PartialColoring::from_colors(9, colors).unwrap();
        let back = parse_coloring(&serialize_coloring(&c)).unwrap().resized(c.edge_count());
        prop_assert_eq!(back, c);
    }

    #[test]
    fn available_colors_match_definition(g in graph(), mask in any::<u64>(), shift in 0u64..9) {
        let edges = edge_list(&g);
        // a good partial coloring: color greedily, skipping edges by mask
        let mut colors = vec![None; edges.len()];
        for e in 0..edges.len() {
            if mask >> (e % 64) & 1 == 0 {
                continue;
            }
            let c = (1..=9u8)
                .map(|c| (c - 1 + shift as u8) % 9 + 1)
                .find(|&c| (0..edges.len()).all(|f| colors[f] != Some(c) || !sees(&edges, e, f)));
            colors[e] = c;
        }
        let partial = PartialColoring::from_colors(9, colors.clone()).unwrap();
        for e in (0..edges.len()).filter(|&e| colors[e].is_none()) {
            let avail = available_colors(&g, &partial, e).unwrap();
            for c in 1..=9 {
                let free = (0..edges.len()).all(|f| colors[f] != Some(c) || !sees(&edges, e, f));
                prop_assert_eq!(avail.contains(c), free, "edge {} color {}", e, c);
            }
        }
    }

    #[test]
    fn reduction_coloring_is_strong(g in graph()) {
        let (c, trace) = color_graph(&g).unwrap();
        let edges = edge_list(&g);
        let colors: Vec<u8> = c.colors().iter().map(|c| c.unwrap()).collect();
        prop_assert!(is_strong(&edges, &colors, 9));
        prop_assert!(trace.entries.iter().all(|t| t.depth < g.vertex_count() + g.edge_count()));
    }
}
