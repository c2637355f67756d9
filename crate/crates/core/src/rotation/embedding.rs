use super::graph::{Dart, DartGraph};
use crate::error::{Error, Result};

/// Successor map on darts: `next(d)` follows `d` in the clockwise order
/// around `tail(d)`. The darts at each vertex form exactly one cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    next: Vec<u32>,
}

impl RotationSystem {
    /// Builds a rotation from one cyclic order per vertex.
    pub fn from_orders(graph: &DartGraph, orders: &[Vec<Dart>]) -> Result<Self> {
        if orders.len() != graph.vertex_count() {
            return Err(Error::MalformedRotation(format!(
                "{} vertex orders supplied for {} vertices",
                orders.len(),
                graph.vertex_count()
            )));
        }
        let mut next = vec![u32::MAX; graph.dart_count()];
        for (v, order) in orders.iter().enumerate() {
            for (i, &d) in order.iter().enumerate() {
                if d.index() >= next.len() {
                    return Err(Error::MalformedRotation(format!("{d} is not a dart")));
                }
                next[d.index()] = order[(i + 1) % order.len()].index() as u32;
            }
            if order.len() != graph.degree(v) {
                return Err(Error::MalformedRotation(format!(
                    "vertex {v} has degree {} but its order lists {} darts",
                    graph.degree(v),
                    order.len()
                )));
            }
        }
        let rot = RotationSystem { next };
        rot.validate(graph)?;
        Ok(rot)
    }

    pub fn from_next(graph: &DartGraph, next: Vec<Dart>) -> Result<Self> {
        let rot = RotationSystem {
            next: next.iter().map(|d| d.index() as u32).collect(),
        };
        rot.validate(graph)?;
        Ok(rot)
    }

    pub(crate) fn from_raw(next: Vec<u32>) -> Self {
        RotationSystem { next }
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [u32] {
        &mut self.next
    }

    pub fn dart_count(&self) -> usize {
        self.next.len()
    }

    pub fn next(&self, d: Dart) -> Dart {
        Dart::new(self.next[d.index()] as usize)
    }

    /// Cyclic order at `v`, starting from its first dart in construction order.
    pub fn order_at(&self, graph: &DartGraph, v: usize) -> Vec<Dart> {
        let Some(&first) = graph.out_darts(v).first() else {
            return Vec::new();
        };
        let mut order = vec![first];
        let mut d = self.next(first);
        while d != first {
            order.push(d);
            d = self.next(d);
        }
        order
    }

    pub fn orders(&self, graph: &DartGraph) -> Vec<Vec<Dart>> {
        (0..graph.vertex_count()).map(|v| self.order_at(graph, v)).collect()
    }

    /// Checks that `next` permutes the darts of every vertex in one cycle.
    pub fn validate(&self, graph: &DartGraph) -> Result<()> {
        if self.next.len() != graph.dart_count() {
            return Err(Error::MalformedRotation(format!(
                "rotation covers {} darts, graph has {}",
                self.next.len(),
                graph.dart_count()
            )));
        }
        for d in graph.darts() {
            let n = self.next[d.index()] as usize;
            if n >= self.next.len() {
                return Err(Error::MalformedRotation(format!("next({d}) is undefined")));
            }
            if graph.tail(Dart::new(n)) != graph.tail(d) {
                return Err(Error::MalformedRotation(format!(
                    "next({d}) = d{n} leaves a different vertex"
                )));
            }
        }
        for v in 0..graph.vertex_count() {
            let darts = graph.out_darts(v);
            let Some(&first) = darts.first() else { continue };
            let mut len = 1;
            let mut d = self.next(first);
            while d != first {
                len += 1;
                if len > darts.len() {
                    return Err(Error::MalformedRotation(format!(
                        "darts at vertex {v} do not form a single cycle"
                    )));
                }
                d = self.next(d);
            }
            if len != darts.len() {
                return Err(Error::MalformedRotation(format!(
                    "darts at vertex {v} split into several cycles"
                )));
            }
        }
        Ok(())
    }
}

/// Facial walks of an embedding, each a cycle of darts under
/// `d ↦ next(twin(d))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<u32>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()] as usize
    }
}

/// Traces all faces. Each face starts at its smallest dart; faces are
/// listed in order of their starting darts.
pub fn trace_faces(graph: &DartGraph, rot: &RotationSystem) -> Result<FaceSet> {
    rot.validate(graph)?;
    let n = rot.next.len();
    let mut face_of = vec![u32::MAX; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if face_of[start] != u32::MAX {
            continue;
        }
        let id = faces.len() as u32;
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            walk.push(Dart::new(d));
            d = rot.next[d ^ 1] as usize;
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    Ok(FaceSet { faces, face_of })
}

/// Reusable scratch space for counting faces without allocating.
#[derive(Debug, Default)]
pub struct FaceCounter {
    stamp: Vec<u32>,
    epoch: u32,
}

impl FaceCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, rot: &RotationSystem) -> usize {
        let next = &rot.next;
        if self.stamp.len() != next.len() || self.epoch == u32::MAX {
            self.stamp = vec![0; next.len()];
            self.epoch = 0;
        }
        self.epoch += 1;
        let epoch = self.epoch;
        let mut faces = 0;
        for start in 0..next.len() {
            if self.stamp[start] == epoch {
                continue;
            }
            faces += 1;
            let mut d = start;
            while self.stamp[d] != epoch {
                self.stamp[d] = epoch;
                d = next[d ^ 1] as usize;
            }
        }
        faces
    }
}

/// `g = 1 + (E − V − f) / 2`, rejecting odd or negative outcomes. An
/// edgeless graph is a single vertex on the sphere with one face.
pub fn euler_genus(vertices: usize, edges: usize, faces: usize) -> Result<usize> {
    let faces = if edges == 0 { 1 } else { faces };
    let twice = 2 + edges as i64 - vertices as i64 - faces as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::EulerViolation { vertices, edges, faces });
    }
    Ok((twice / 2) as usize)
}

pub fn genus(graph: &DartGraph, rot: &RotationSystem) -> Result<usize> {
    let components = graph.component_count();
    if components > 1 {
        return Err(Error::Disconnected(components));
    }
    let faces = trace_faces(graph, rot)?;
    euler_genus(graph.vertex_count(), graph.edge_count(), faces.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: usize) -> Dart {
        Dart::new(i)
    }

    #[test]
    fn single_loop_is_planar() {
        let g = DartGraph::from_edges(1, &[(0, 0)]).unwrap();
        let rot = RotationSystem::from_orders(&g, &[vec![d(0), d(1)]]).unwrap();
        assert_eq!(trace_faces(&g, &rot).unwrap().len(), 2);
        assert_eq!(genus(&g, &rot).unwrap(), 0);
    }

    #[test]
    fn figure_eight_embeddings() {
        // Loop a = darts 0,1 (a, a′); loop b = darts 2,3.
        let g = DartGraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let planar = RotationSystem::from_orders(&g, &[vec![d(0), d(1), d(2), d(3)]]).unwrap();
        let toroidal = RotationSystem::from_orders(&g, &[vec![d(0), d(2), d(1), d(3)]]).unwrap();
        assert_eq!(trace_faces(&g, &planar).unwrap().len(), 3);
        assert_eq!(genus(&g, &planar).unwrap(), 0);
        assert_eq!(trace_faces(&g, &toroidal).unwrap().len(), 1);
        assert_eq!(genus(&g, &toroidal).unwrap(), 1);
    }

    #[test]
    fn faces_partition_darts() {
        let g = DartGraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let rot = RotationSystem::from_orders(&g, &[vec![d(0), d(2), d(3), d(1)]]).unwrap();
        let fs = trace_faces(&g, &rot).unwrap();
        let total: usize = fs.faces().iter().map(Vec::len).sum();
        assert_eq!(total, g.dart_count());
        for (i, face) in fs.faces().iter().enumerate() {
            for &x in face {
                assert_eq!(fs.face_of(x), i);
            }
        }
        assert_eq!(FaceCounter::new().count(&rot), fs.len());
    }

    #[test]
    fn malformed_rotations_rejected() {
        let g = DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        // Darts 0, 2, 4 at vertex 0; 1, 3, 5 at vertex 1.
        let split = RotationSystem::from_next(
            &g,
            vec![d(0), d(3), d(4), d(1), d(2), d(5)],
        );
        assert!(matches!(split, Err(Error::MalformedRotation(_))));
        let crossing = RotationSystem::from_next(
            &g,
            vec![d(1), d(3), d(4), d(5), d(0), d(1)],
        );
        assert!(matches!(crossing, Err(Error::MalformedRotation(_))));
        let short = RotationSystem::from_raw(vec![0, 1]);
        assert!(trace_faces(&g, &short).is_err());
        let wrong_size = RotationSystem::from_orders(&g, &[vec![d(0)], vec![d(1)]]);
        assert!(wrong_size.is_err());
    }

    #[test]
    fn orders_round_trip() {
        let g = DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let orders = vec![vec![d(0), d(4), d(2)], vec![d(1), d(3), d(5)]];
        let rot = RotationSystem::from_orders(&g, &orders).unwrap();
        assert_eq!(rot.orders(&g), orders);
    }

    #[test]
    fn disconnected_graph_has_no_genus() {
        let g = DartGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rot = RotationSystem::from_orders(&g, &[vec![d(0)], vec![d(1)], vec![d(2)], vec![d(3)]])
            .unwrap();
        assert_eq!(genus(&g, &rot), Err(Error::Disconnected(2)));
    }

    #[test]
    fn euler_genus_edge_cases() {
        assert_eq!(euler_genus(1, 0, 0).unwrap(), 0);
        assert!(matches!(euler_genus(2, 1, 2), Err(Error::EulerViolation { .. })));
        assert!(matches!(euler_genus(3, 3, 5), Err(Error::EulerViolation { .. })));
        assert_eq!(euler_genus(8, 9, 1).unwrap(), 1);
    }
}
