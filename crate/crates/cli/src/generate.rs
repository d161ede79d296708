use std::path::PathBuf;

use clap::{Args, ValueEnum};

use balcover_core::coverage::{reduce_md, reduce_mvc};
use balcover_core::generators::{
    checkerboard, grid, grid_subgraph, random_coloring, random_coverage, striped_coloring, triangulated_grid,
};
use balcover_core::graph::Graph;
use balcover_core::rng::stream_rng;

use crate::error::CliError;
use crate::files::emit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Grid,
    TriangulatedGrid,
    GridSubgraph,
    MvcInstance,
    MdInstance,
    McRandom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coloring {
    None,
    Random,
    Striped,
    Checkerboard,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    width: usize,
    #[arg(long, default_value_t = 4)]
    height: usize,
    /// Edge survival probability for grid subgraphs.
    #[arg(long, default_value_t = 0.7)]
    keep: f64,
    /// Random diagonal directions for triangulated grids.
    #[arg(long)]
    random_diagonals: bool,
    #[arg(long, value_enum, default_value_t = Coloring::None)]
    coloring: Coloring,
    /// Color weights for random colorings, e.g. `3,7`.
    #[arg(long, value_delimiter = ',', default_value = "1,1")]
    weights: Vec<u32>,
    /// Colors and stripe width for striped colorings.
    #[arg(long, default_value_t = 2)]
    colors: usize,
    #[arg(long, default_value_t = 1)]
    stripe: usize,
    /// Budget for coverage instances.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 20)]
    universe: usize,
    #[arg(long, default_value_t = 10)]
    sets: usize,
    #[arg(long, default_value_t = 0.25)]
    density: f64,
    /// Main output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Underlying graph of an mvc/md instance.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

fn planar_graph(args: &GenerateArgs, kind: Kind) -> Result<Graph, CliError> {
    if args.width == 0 || args.height == 0 {
        return Err(CliError::params("width and height must be positive"));
    }
    let mut rng = stream_rng(args.seed, 0);
    let g = match kind {
        Kind::Grid => grid(args.width, args.height),
        Kind::GridSubgraph => {
            if !(0.0..=1.0).contains(&args.keep) {
                return Err(CliError::params(format!("keep = {} is not a probability", args.keep)));
            }
            grid_subgraph(args.width, args.height, args.keep, &mut rng)
        }
        _ => triangulated_grid(args.width, args.height, args.random_diagonals.then_some(&mut rng)),
    };
    let mut color_rng = stream_rng(args.seed, 1);
    Ok(match args.coloring {
        Coloring::None => g,
        Coloring::Random => {
            if args.weights.is_empty() || args.weights.iter().sum::<u32>() == 0 {
                return Err(CliError::params("color weights must have a positive sum"));
            }
            random_coloring(g, &args.weights, &mut color_rng)
        }
        Coloring::Striped => {
            if args.colors == 0 || args.stripe == 0 {
                return Err(CliError::params("colors and stripe must be positive"));
            }
            striped_coloring(g, args.width, args.stripe, args.colors)
        }
        Coloring::Checkerboard => checkerboard(g, args.width),
    })
}

pub fn run(args: GenerateArgs) -> Result<(), CliError> {
    match args.kind {
        Kind::Grid | Kind::TriangulatedGrid | Kind::GridSubgraph => {
            let g = planar_graph(&args, args.kind)?;
            emit(args.out.as_ref(), &g.to_text())
        }
        Kind::MvcInstance | Kind::MdInstance => {
            let g = planar_graph(&args, args.kind)?;
            let inst = if args.kind == Kind::MvcInstance { reduce_mvc(&g, args.k)? } else { reduce_md(&g, args.k)? };
            if let Some(p) = &args.graph_out {
                emit(Some(p), &g.to_text())?;
            }
            emit(args.out.as_ref(), &inst.to_json())
        }
        Kind::McRandom => {
            if !(0.0..=1.0).contains(&args.density) {
                return Err(CliError::params(format!("density = {} is not a probability", args.density)));
            }
            if args.k > args.sets {
                return Err(CliError::params(format!("k = {} exceeds the number of sets {}", args.k, args.sets)));
            }
            let inst = random_coverage(args.universe, args.sets, args.k, args.density, &mut stream_rng(args.seed, 0));
            emit(args.out.as_ref(), &inst.to_json())
        }
    }
}
