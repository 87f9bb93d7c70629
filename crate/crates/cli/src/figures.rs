//! Figure pipelines: one CSV per panel plus a gnuplot script that reads them.

use std::path::Path;

use rayon::prelude::*;

use plasmon_itm::dispersion::critical_u;
use plasmon_itm::psf::{self, PsfKind};

use crate::commands::{dispersion_table, midpoints, u_grid_above_critical};
use crate::config::{Provenance, RunConfig};
use crate::error::{CliError, Context};
use crate::output::{render, write_atomic, Table};

pub const FIGURE1_ZETAS: [f64; 5] = [0.1, 0.2, 2.0, 10.0, 20.0];
/// `cT / z0` of the two panels, with `z0 = 10 ell0`.
pub const FIGURE2_CT_OVER_Z0: [f64; 2] = [5.0, 15.0];
pub const FIGURE3_GAMMAS: [f64; 2] = [0.9, 0.99];

pub fn figure1_file(zeta: f64) -> String {
    format!("fig1_zeta{zeta}.csv")
}

pub fn figure2_file(ct_over_z0: f64) -> String {
    format!("fig2_ct{ct_over_z0}z0.csv")
}

pub fn figure3_file(gamma: f64) -> String {
    format!("fig3_gamma{gamma}.csv")
}

fn write_script(dir: &Path, name: &str, body: &str) -> Result<(), CliError> {
    let text = format!(
        "# gnuplot script; run from this directory\nset datafile separator ','\nset key autotitle columnhead\n{body}"
    );
    write_atomic(&dir.join(name), text.as_bytes())
}

/// Exact and simplified `J_P` on `r in [0, 40 ell0]` at `z = 0`, both divided
/// by the exact value at `r = 0`.
pub fn figure1_panel(cfg: &RunConfig, zeta: f64, n: usize) -> Result<Table, CliError> {
    let p = &cfg.params;
    let l = p.ell0();
    let ctx = || format!("figure 1, zeta = {zeta}");
    let u_c = p.critical_u().context(ctx)?;
    let source = cfg.source(zeta * l / (cfg.xi * u_c))?;
    let t = cfg.t_mirror(source.z0);
    let rs: Vec<f64> = (0..n).map(|i| 40.0 * l * i as f64 / (n - 1) as f64).collect();
    let pairs: Vec<(f64, f64)> = rs
        .par_iter()
        .map(|&r| {
            Ok((
                psf::jp_exact(p, &source, t, r, 0.0, &cfg.quad)?,
                psf::jp_asymptotic(p, &source, t, r, 0.0, &cfg.quad)?,
            ))
        })
        .collect::<plasmon_itm::Result<_>>()
        .context(ctx)?;
    let norm = pairs[0].0;
    let mut table = Table::new(["r", "r_over_ell0", "exact", "asymptotic", "exact_normalized", "asymptotic_normalized"]);
    table.rows = rs
        .iter()
        .zip(&pairs)
        .map(|(&r, &(e, a))| vec![r, r / l, e, a, e / norm, a / norm])
        .collect();
    Ok(table)
}

/// `|J_S|` over `r in [0, 10 ell0]` and cell midpoints of `z in (0, 2 z0)`,
/// divided by its maximum on the grid.
pub fn figure2_panel(cfg: &RunConfig, ct_over_z0: f64, n: usize) -> Result<Table, CliError> {
    let params = &cfg.params;
    let l = params.ell0();
    let source = cfg.source(10.0 * l)?;
    let t = ct_over_z0 * source.z0 / params.c();
    let rs: Vec<f64> = (0..n).map(|i| 10.0 * l * i as f64 / (n - 1) as f64).collect();
    let zs = midpoints(0.0, 2.0 * source.z0, n);
    let field = psf::grid(&rs, &zs, PsfKind::Scattered, None, |r, z| {
        psf::js_asymptotic(params, &source, t, r, z, &cfg.quad)
    })
    .context(|| format!("figure 2, cT = {ct_over_z0} z0"))?;
    let mut table = Table::new(["r", "z", "value", "value_normalized"]);
    for (j, &z) in zs.iter().enumerate() {
        for (i, &r) in rs.iter().enumerate() {
            let v = field.at(i, j);
            table.rows.push(vec![r, z, v, v.abs() / field.normalization]);
        }
    }
    Ok(table)
}

pub fn figure3_panel(gamma: f64) -> Result<Table, CliError> {
    let u_c = critical_u(gamma).context(|| format!("figure 3, gamma = {gamma}"))?;
    dispersion_table(gamma, &u_grid_above_critical(u_c, 10.0, 400))
}

pub fn figure(cfg: &RunConfig, out: &Path, which: u8, resolution: Option<usize>) -> Result<(), CliError> {
    match which {
        1 => {
            let n = resolution.unwrap_or(201).max(2);
            for zeta in FIGURE1_ZETAS {
                let table = figure1_panel(cfg, zeta, n)?;
                let prov = Provenance::new("figure 1", cfg).with("zeta", zeta).with("n", n);
                write_atomic(&out.join(figure1_file(zeta)), &render(&prov, &table))?;
            }
            let plot = |zetas: &[f64]| {
                zetas
                    .iter()
                    .map(|&z| {
                        let f = figure1_file(z);
                        format!("'{f}' using 2:5 with lines title 'exact {z}', '{f}' using 2:6 with lines dt 2 title 'asymptotic {z}'")
                    })
                    .collect::<Vec<_>>()
                    .join(", \\\n     ")
            };
            let body = format!(
                "set multiplot layout 1,2\nset xlabel 'r / ell0'\nplot {}\nplot {}\nunset multiplot\n",
                plot(&[0.1, 10.0]),
                plot(&[0.2, 2.0, 20.0])
            );
            write_script(out, "figure1.gp", &body)
        }
        2 => {
            let n = resolution.unwrap_or(200).max(2);
            for ct in FIGURE2_CT_OVER_Z0 {
                let table = figure2_panel(cfg, ct, n)?;
                let prov = Provenance::new("figure 2", cfg).with("cT_over_z0", ct).with("n", n);
                write_atomic(&out.join(figure2_file(ct)), &render(&prov, &table))?;
            }
            let body = FIGURE2_CT_OVER_Z0
                .iter()
                .map(|&ct| format!("plot '{}' using 1:2:4 with image title 'cT = {ct} z0'", figure2_file(ct)))
                .collect::<Vec<_>>()
                .join("\n");
            write_script(
                out,
                "figure2.gp",
                &format!("set multiplot layout 1,2\nset xlabel 'r'\nset ylabel 'z'\n{body}\nunset multiplot\n"),
            )
        }
        3 => {
            for gamma in FIGURE3_GAMMAS {
                let table = figure3_panel(gamma)?;
                let prov = Provenance::new("figure 3", cfg).with("gamma", gamma);
                write_atomic(&out.join(figure3_file(gamma)), &render(&prov, &table))?;
            }
            let mut body = String::from("set multiplot layout 2,2\nset xlabel 'u'\n");
            for gamma in FIGURE3_GAMMAS {
                let f = figure3_file(gamma);
                body.push_str(&format!(
                    "plot '{f}' using 1:2 with lines title 'Re exact', '{f}' using 1:4 with lines dt 2 title 'Re asymptotic'\n\
                     plot '{f}' using 1:3 with lines title 'Im exact', '{f}' using 1:5 with lines dt 2 title 'Im asymptotic'\n"
                ));
            }
            body.push_str("unset multiplot\n");
            write_script(out, "figure3.gp", &body)
        }
        other => Err(CliError::Config(format!("unknown figure {other} (expected 1, 2 or 3)"))),
    }
}
