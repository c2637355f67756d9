use crate::error::{Error, Result};
use crate::fascia::FasciaGraph;
use crate::rotation::{cyclic_orders, write_order, Dart, RotationSystem};

/// Cyclic order of the darts of one vertex that already existed in
/// `G_{n−1}`, read from `prev` and starting at the vertex's first old dart.
fn old_cycle(prev: &RotationSystem, old_darts: &[u32]) -> Result<Vec<u32>> {
    let Some(&first) = old_darts.first() else {
        return Ok(Vec::new());
    };
    let mut cycle = vec![first];
    let mut d = prev.next(Dart::new(first as usize)).index() as u32;
    while d != first {
        if cycle.len() >= old_darts.len() || !old_darts.contains(&d) {
            return Err(Error::MalformedRotation(format!(
                "darts at a vertex of the shorter chain do not form one cycle (at d{d})"
            )));
        }
        cycle.push(d);
        d = prev.next(Dart::new(d as usize)).index() as u32;
    }
    if cycle.len() != old_darts.len() {
        return Err(Error::MalformedRotation(
            "darts at a vertex of the shorter chain split into several cycles".into(),
        ));
    }
    Ok(cycle)
}

/// Whether the sub-sequence of `order` made of old darts is the cyclic
/// sequence `old`.
fn restricts_to(order: &[u32], old: &[u32], old_limit: u32) -> bool {
    let kept: Vec<u32> = order.iter().copied().filter(|&d| d < old_limit).collect();
    if kept.len() != old.len() {
        return false;
    }
    if old.is_empty() {
        return true;
    }
    let Some(shift) = kept.iter().position(|&d| d == old[0]) else {
        return false;
    };
    (0..old.len()).all(|i| kept[(shift + i) % kept.len()] == old[i])
}

/// All rotation systems of `G_n` whose restriction to `G_{n−1}` is `prev`.
///
/// Vertices created in the last step take every cyclic order; vertices of
/// `G_{n−1}` that gained darts take every insertion of the new darts into
/// their old cyclic order. The result is the product of these local
/// choices, in odometer order with the highest vertex turning fastest.
pub fn enumerate_extensions(fg: &FasciaGraph, prev: &RotationSystem) -> Result<Vec<RotationSystem>> {
    if fg.n == 0 {
        return Err(Error::InvalidFamily("G_0 has no predecessor to extend".into()));
    }
    let (old_vertices, old_edges) = fg.levels[fg.n - 1];
    let old_limit = 2 * old_edges;
    if prev.dart_count() != old_limit {
        return Err(Error::LengthMismatch {
            level: fg.n - 1,
            expected: old_limit,
            found: prev.dart_count(),
        });
    }
    let old_limit = old_limit as u32;
    let graph = &fg.graph;
    let mut options: Vec<Vec<Vec<u32>>> = Vec::with_capacity(graph.vertex_count());
    for v in 0..graph.vertex_count() {
        let darts: Vec<u32> = graph.out_darts(v).iter().map(|d| d.index() as u32).collect();
        let all = cyclic_orders(&darts);
        if v >= old_vertices {
            options.push(all);
            continue;
        }
        let old_darts: Vec<u32> = darts.iter().copied().filter(|&d| d < old_limit).collect();
        let old = old_cycle(prev, &old_darts)?;
        if old_darts.len() == darts.len() {
            options.push(vec![old]);
            continue;
        }
        options.push(all.into_iter().filter(|o| restricts_to(o, &old, old_limit)).collect());
    }

    let mut next = vec![0u32; graph.dart_count()];
    for choice in &options {
        write_order(&mut next, &choice[0]);
    }
    let active: Vec<usize> = (0..options.len()).filter(|&v| options[v].len() > 1).collect();
    let mut digits = vec![0usize; active.len()];
    let mut out = Vec::new();
    loop {
        out.push(RotationSystem::from_raw(next.clone()));
        let mut slot = active.len();
        loop {
            if slot == 0 {
                return Ok(out);
            }
            slot -= 1;
            let v = active[slot];
            digits[slot] = (digits[slot] + 1) % options[v].len();
            write_order(&mut next, &options[v][digits[slot]]);
            if digits[slot] != 0 {
                break;
            }
        }
    }
}
