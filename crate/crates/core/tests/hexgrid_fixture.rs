use std::collections::HashMap;

use serde::Deserialize;
use zigzag_core::oracles::{matching_heights, HexGrid};

type Point = [i64; 2];

#[derive(Deserialize)]
struct Fixture {
    n: usize,
    m: usize,
    vertices: Vec<Point>,
    edges: Vec<[Point; 2]>,
    example_matching: Vec<[Point; 2]>,
    example_heights: Vec<usize>,
}

fn fixture() -> Fixture {
    serde_json::from_str(include_str!("fixtures/hexgrid_7_5.json")).unwrap()
}

#[test]
fn construction_matches_drawn_grid() {
    let f = fixture();
    let grid = HexGrid::new(f.n, f.m);
    let vertices: Vec<Point> = grid.vertices.iter().map(|&(x, y)| [x, y]).collect();
    assert_eq!(vertices, f.vertices);
    let edges: Vec<[Point; 2]> = grid.coordinate_edges().iter().map(|&((a, b), (c, d))| [[a, b], [c, d]]).collect();
    assert_eq!(edges, f.edges);
    assert!(grid.is_bipartite());
}

#[test]
fn drawn_matching_has_the_stated_heights() {
    let f = fixture();
    let grid = HexGrid::new(f.n, f.m);
    let index: HashMap<[Point; 2], usize> =
        grid.coordinate_edges().iter().enumerate().map(|(i, &((a, b), (c, d)))| ([[a, b], [c, d]], i)).collect();
    // coordinate_edges is sorted like grid.edges, so positions line up
    let matching: Vec<usize> = f.example_matching.iter().map(|e| index[e]).collect();
    let mut covered: Vec<usize> = matching.iter().flat_map(|&e| [grid.edges[e].0, grid.edges[e].1]).collect();
    covered.sort();
    assert_eq!(covered, (0..grid.vertices.len()).collect::<Vec<_>>());
    assert_eq!(matching_heights(&grid, &matching).unwrap(), f.example_heights);
}
