//! Diagnostic tables computed from trajectories.

use crate::algebra::{format_real, ConjKind, RealModulus};
use crate::born::{born_report, chart_mask, masked_max_abs_delta};
use crate::conservation::{continuity_residual, convergence_orders, DensityKind};
use crate::error::Result;
use crate::evolution::{pde_residuals, Trajectory};
use crate::io::Table;
use crate::symmetry::SymmetryOp;

fn f(v: f64) -> String {
    format_real(v)
}

/// Columns `t, kind, residual_max, residual_l2`.
pub fn continuity_table(traj: &Trajectory) -> Result<Table> {
    let mut t = Table::new(&["t", "kind", "residual_max", "residual_l2"]);
    for kind in DensityKind::ALL {
        for r in continuity_residual(traj, kind)? {
            t.push(vec![f(r.time), kind.to_string(), f(r.max), f(r.l2)]);
        }
    }
    Ok(t)
}

/// Observed orders between consecutive members of a refinement family, as
/// a JSON-style block.
pub fn continuity_orders(levels: &[Trajectory]) -> Result<String> {
    let mut out = format!("{{\n  \"levels\": {},\n  \"orders\": {{\n", levels.len());
    for (n, kind) in DensityKind::ALL.into_iter().enumerate() {
        let res = levels.iter().map(|t| continuity_residual(t, kind)).collect::<Result<Vec<_>>>()?;
        let orders: Vec<String> = convergence_orders(&res).into_iter().map(f).collect();
        let sep = if n + 1 < DensityKind::ALL.len() { "," } else { "" };
        out.push_str(&format!("    \"{kind}\": [{}]{sep}\n", orders.join(", ")));
    }
    out.push_str("  }\n}\n");
    Ok(out)
}

/// Columns `t, residual_a .. residual_d, points`.
pub fn pde_table(traj: &Trajectory, amplitude_floor: f64) -> Result<Table> {
    let mut t = Table::new(&["t", "residual_a", "residual_b", "residual_c", "residual_d", "points"]);
    for r in pde_residuals(traj, amplitude_floor)? {
        let mut row = vec![f(r.time)];
        row.extend(r.max.iter().map(|&v| f(v)));
        row.push(r.points.to_string());
        t.push(row);
    }
    Ok(t)
}

pub struct BornTables {
    pub densities: Table,
    pub scaling: Table,
    pub class: Table,
}

/// Born densities, symmetry scalings and the null-hyperbolic verdict for
/// every snapshot, over interior grid points.
pub fn born_tables(traj: &Trajectory, null_tol: f64, amplitude_floor: f64) -> Result<BornTables> {
    let mut densities = Table::new(&["t", "kind", "integral", "min", "max"]);
    let mut scaling = Table::new(&["t", "op", "kind", "min_ratio", "max_ratio", "closed_form_dev"]);
    let mut class = Table::new(&["t", "null_hyperbolic", "max_abs_delta", "tol", "chain_deviation", "chain_holds"]);
    for s in &traj.snapshots {
        let r = born_report(&s.interior()?, null_tol, amplitude_floor)?;
        for d in &r.densities {
            densities.push(vec![f(r.time), d.kind.index().to_string(), f(d.integral), f(d.min), f(d.max)]);
        }
        for c in &r.scaling {
            scaling.push(vec![
                f(r.time),
                c.op.to_string(),
                c.kind.index().to_string(),
                f(c.min_ratio),
                f(c.max_ratio),
                f(c.max_closed_form_dev),
            ]);
        }
        let c = r.class;
        class.push(vec![
            f(r.time),
            c.null_hyperbolic.to_string(),
            f(c.max_abs_delta),
            f(c.tol),
            c.chain_deviation.map_or_else(|| "-".to_string(), f),
            c.chain_holds().to_string(),
        ]);
    }
    Ok(BornTables { densities, scaling, class })
}

pub struct SymmetryTables {
    /// Columns `t, op, substitution, class, involution_dev, period_dev`.
    pub operators: Table,
    /// Columns `t, max_abs_delta, p1_residual_change`. `max_abs_delta` is
    /// taken over chart-mask points; the last column is `-` at the first and
    /// last snapshot.
    pub system: Table,
}

/// Pointwise involution and period checks of `P0..P7` on the interior of every snapshot,
/// and the change of the four-equation residuals when `ψ` is replaced by
/// `P1 ψ = ψ^†2`.
pub fn symmetry_tables(traj: &Trajectory, amplitude_floor: f64) -> Result<SymmetryTables> {
    let mut operators = Table::new(&["t", "op", "substitution", "class", "involution_dev", "period_dev"]);
    let mut system = Table::new(&["t", "max_abs_delta", "p1_residual_change"]);
    let interiors = traj.snapshots.iter().map(|s| s.interior()).collect::<Result<Vec<_>>>()?;
    let charts = interiors.iter().map(|s| s.to_hyper_polar()).collect::<Result<Vec<_>>>()?;
    for h in &charts {
        for op in SymmetryOp::ALL {
            let (mut inv, mut per) = (0.0f64, 0.0f64);
            let shifted = SymmetryOp::new((op.index() + 4) % 8).expect("index below 8");
            for e in h.exponents() {
                let g = e.generalized();
                inv = inv.max((op.act(op.act(g)).value() - e.to_bicomplex()).real_modulus(RealModulus::Third));
                per = per.max((op.apply(e) - shifted.apply(e)).real_modulus(RealModulus::Third));
            }
            operators.push(vec![
                f(h.time),
                op.to_string(),
                op.substitution_text().to_string(),
                op.field_class().to_string(),
                f(inv),
                f(per),
            ]);
        }
    }
    let change = if traj.snapshots.len() >= 3 {
        let mut p1 = traj.clone();
        for s in &mut p1.snapshots {
            *s = s.map(|w| w.conj(ConjKind::Dag2));
        }
        let (a, b) = (pde_residuals(traj, amplitude_floor)?, pde_residuals(&p1, amplitude_floor)?);
        a.iter()
            .zip(&b)
            .map(|(x, y)| x.max.iter().zip(&y.max).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max))
            .collect()
    } else {
        Vec::new()
    };
    for (k, (h, s)) in charts.iter().zip(&interiors).enumerate() {
        let c = if k == 0 { None } else { change.get(k - 1) };
        let delta = masked_max_abs_delta(h, &chart_mask(s, amplitude_floor));
        system.push(vec![f(h.time), f(delta), c.map_or_else(|| "-".to_string(), |&v| f(v))]);
    }
    Ok(SymmetryTables { operators, system })
}
