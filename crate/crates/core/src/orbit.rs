//! Orbit structure of an endofunction: components, cycles, basins.
//!
//! Every functional graph splits into weakly connected components, each
//! containing exactly one cycle with trees hanging off it. A component is
//! *repulsive* when it equals its cycle and *attractive* otherwise.

use crate::error::{Error, Result};
use crate::function::FunctionTable;

/// One component of the functional graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Least element of the component.
    pub representative: usize,
    /// Length of the inner cycle (the order of every element here).
    pub period: usize,
    /// The cycle, starting from its least element and following `f`.
    pub cycle: Vec<usize>,
    /// All elements of the component, sorted ascending (cycle included).
    pub basin: Vec<usize>,
    /// True when the component is strictly larger than its cycle.
    pub attractive: bool,
}

/// Complete decomposition of the domain into components, sorted by
/// representative. Built by [`OrbitStructure::analyze`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructure {
    function: FunctionTable,
    components: Vec<Component>,
    membership: Vec<usize>, // point -> index into components
}

impl OrbitStructure {
    /// Decomposes the functional graph of `f` in O(n) time and space.
    ///
    /// Iterative walk: follow the path from each unvisited point, marking
    /// the path; the walk either closes a new cycle inside itself or runs
    /// into an already-classified point, and either way the whole path joins
    /// that component.
    pub fn analyze(f: &FunctionTable) -> OrbitStructure {
        let n = f.n();
        let images = f.images();
        const UNVISITED: usize = usize::MAX;
        const ON_PATH: usize = usize::MAX - 1;
        let mut membership = vec![UNVISITED; n];
        let mut position = vec![0usize; n]; // index within the current path
        let mut path: Vec<usize> = Vec::new();
        let mut components: Vec<Component> = Vec::new();

        for start in 0..n {
            if membership[start] != UNVISITED {
                continue;
            }
            path.clear();
            let mut x = start;
            while membership[x] == UNVISITED {
                membership[x] = ON_PATH;
                position[x] = path.len();
                path.push(x);
                x = images[x];
            }
            let component_index = if membership[x] == ON_PATH {
                // The walk closed a new cycle within the current path.
                let cycle_slice = &path[position[x]..];
                let min_at = cycle_slice
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, v)| *v)
                    .map(|(i, _)| i)
                    .unwrap();
                let mut cycle = Vec::with_capacity(cycle_slice.len());
                cycle.extend_from_slice(&cycle_slice[min_at..]);
                cycle.extend_from_slice(&cycle_slice[..min_at]);
                components.push(Component {
                    representative: start,
                    period: cycle.len(),
                    cycle,
                    basin: Vec::new(),
                    attractive: false,
                });
                components.len() - 1
            } else {
                membership[x]
            };
            for &v in &path {
                membership[v] = component_index;
            }
        }

        // Components were created in order of their least element (the first
        // walk to touch a component starts at its minimum), so they are
        // already sorted by representative; fill basins in ascending order.
        for v in 0..n {
            components[membership[v]].basin.push(v);
        }
        for c in &mut components {
            c.attractive = c.basin.len() > c.period;
            debug_assert_eq!(c.representative, c.basin[0]);
        }

        OrbitStructure { function: f.clone(), components, membership }
    }

    pub fn function(&self) -> &FunctionTable {
        &self.function
    }

    /// All components, sorted by representative ascending.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The component containing `x`.
    pub fn component_of(&self, x: usize) -> Result<&Component> {
        if x >= self.function.n() {
            return Err(Error::PointOutOfRange { x, n: self.function.n() });
        }
        Ok(&self.components[self.membership[x]])
    }

    /// The order of `x`: the period of the cycle inside x's component.
    pub fn order_of(&self, x: usize) -> Result<usize> {
        Ok(self.component_of(x)?.period)
    }
}

/// Reusable scratch for the period-extraction inner loop of exhaustive
/// sweeps. Same decomposition as [`OrbitStructure::analyze`], but it only
/// records the component periods (in order of least element) and allocates
/// nothing per call. Domains are capped at 255 so periods fit in a byte,
/// which keeps the census hash keys tiny.
pub(crate) struct OrbitScratch {
    membership: Vec<u16>,
    position: Vec<u16>,
    path: Vec<u16>,
    orders: Vec<u8>,
}

pub(crate) const SCRATCH_MAX_N: usize = 255;

const SCRATCH_UNVISITED: u16 = u16::MAX;
const SCRATCH_ON_PATH: u16 = u16::MAX - 1;

impl OrbitScratch {
    pub(crate) fn new(n: usize) -> OrbitScratch {
        assert!(n <= SCRATCH_MAX_N);
        OrbitScratch {
            membership: vec![SCRATCH_UNVISITED; n],
            position: vec![0; n],
            path: Vec::with_capacity(n),
            orders: Vec::with_capacity(n),
        }
    }

    /// Component periods of `images`, ordered by ascending least element.
    pub(crate) fn orders_of(&mut self, images: &[usize]) -> &[u8] {
        let n = images.len();
        debug_assert_eq!(n, self.membership.len());
        self.membership.fill(SCRATCH_UNVISITED);
        self.orders.clear();
        for start in 0..n {
            if self.membership[start] != SCRATCH_UNVISITED {
                continue;
            }
            self.path.clear();
            let mut x = start;
            while self.membership[x] == SCRATCH_UNVISITED {
                self.membership[x] = SCRATCH_ON_PATH;
                self.position[x] = self.path.len() as u16;
                self.path.push(x as u16);
                x = images[x];
            }
            let component_index = if self.membership[x] == SCRATCH_ON_PATH {
                let cycle_len = self.path.len() - self.position[x] as usize;
                self.orders.push(cycle_len as u8);
                (self.orders.len() - 1) as u16
            } else {
                self.membership[x]
            };
            for &v in &self.path {
                self.membership[v as usize] = component_index;
            }
        }
        &self.orders
    }
}
