//! Structured and random instance families.

mod families;
mod projective;
mod random;
mod transform;

pub use families::{
    cube_vertices, gen_complete, gen_cube, gen_odd_near_regular, gen_triangle_multi,
    triangle_multiplicities,
};
pub use projective::{gen_fano, gen_projective, projective_points, ProjectiveParams};
pub use random::{
    gen_random_regular_uniform, gen_random_simple_regular_uniform, random_graph_min_degree,
    random_multi_uniform, random_multigraph_min_degree, random_uniform_min_degree,
};
pub use transform::{expand, extend_by_vertex, multiply_edges, Expansion};
