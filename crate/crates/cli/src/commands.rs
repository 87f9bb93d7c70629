//! The analysis subcommands.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use plasmon_itm::dispersion::{asymptotic_root, critical_u, relative_residual, solve_dispersion};
use plasmon_itm::fields::{perturbed_components, unperturbed_branch_field, unperturbed_pole_field};
use plasmon_itm::kernels::{kernel_p_asymptotic, kernel_p_exact, kernel_p_regularized, kernel_s, kernel_s_regularized};
use plasmon_itm::psf::{self, PsfKind, RegularizedPath};
use plasmon_itm::KernelMethod;

use crate::config::{GridSpec, Provenance, RunConfig};
use crate::error::{CliError, Context};
use crate::output::{emit, Table};

/// Evaluates one row per input in parallel and keeps the input order.
pub fn rows<F>(xs: &[f64], f: F) -> Result<Vec<Vec<f64>>, CliError>
where
    F: Fn(f64) -> Result<Vec<f64>, CliError> + Sync,
{
    xs.par_iter().map(|&x| f(x)).collect()
}

pub fn params(cfg: &RunConfig) -> Result<(), CliError> {
    let p = &cfg.params;
    let u_c = p.critical_u().context(|| "critical wavenumber".into())?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    let lines = [
        ("sigma0", p.sigma0(), "S"),
        ("eta", p.eta(), ""),
        ("gamma", p.gamma(), ""),
        ("ell0", p.ell0(), "m"),
        ("u_c", u_c, ""),
        ("k_c", u_c / p.ell0(), "1/m"),
        ("c_tau", p.c_tau(), "m"),
    ];
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    writeln!(out, "# {}", cfg.origin).map_err(io)?;
    for (name, value, unit) in lines {
        writeln!(out, "{name:<7}= {value:e} {unit}").map_err(io)?;
    }
    out.flush().map_err(io)
}

/// `n` points on `(u_c, u_max]`, excluding the double root.
pub fn u_grid_above_critical(u_c: f64, u_max: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| u_c + (u_max - u_c) * i as f64 / n as f64).collect()
}

pub fn dispersion_table(gamma: f64, us: &[f64]) -> Result<Table, CliError> {
    let mut table = Table::new(["u", "re_s_plus", "im_s_plus", "re_s_plus_asym", "im_s_plus_asym", "residual"]);
    table.rows = rows(us, |u| {
        let ctx = || format!("dispersion at gamma = {gamma}, u = {u}");
        let roots = solve_dispersion(gamma, u).context(ctx)?;
        let asym = asymptotic_root(gamma, u).context(ctx)?;
        let s = roots.s_plus;
        Ok(vec![u, s.re, s.im, asym.re, asym.im, relative_residual(gamma, u, s)])
    })?;
    Ok(table)
}

pub fn dispersion_scan(cfg: &RunConfig, out: Option<&Path>, gamma: Option<f64>, u: Option<GridSpec>) -> Result<(), CliError> {
    let gamma = gamma.unwrap_or(cfg.params.gamma());
    let u_c = critical_u(gamma).context(|| format!("critical wavenumber at gamma = {gamma}"))?;
    let us = match u {
        Some(g) => g.values(),
        None => u_grid_above_critical(u_c, 10.0, 400),
    };
    let table = dispersion_table(gamma, &us)?;
    let prov = Provenance::new("dispersion-scan", cfg)
        .with("gamma", format!("{gamma:e}"))
        .with("u", u.map_or("auto".into(), |g| g.to_string()));
    emit(out, "dispersion_scan.csv", &prov, &table)
}

pub fn kernel(
    cfg: &RunConfig,
    out: Option<&Path>,
    z: Option<f64>,
    k: Option<GridSpec>,
    method: KernelMethod,
) -> Result<(), CliError> {
    let p = &cfg.params;
    let z0 = cfg.z0;
    let z = z.unwrap_or(z0);
    let t = cfg.t_mirror(z0);
    let k_min = cfg.source(z0)?.k_min(p).context(|| "source".into())?;
    let ks = k.map_or_else(|| GridSpec::new(k_min, 10.0 * k_min, 100).values(), |g| g.values());
    let regularized = cfg.dt > 0.0;
    let mut header = vec!["k", "K_P_exact", "K_P_asym", "K_S"];
    if regularized {
        header.extend(["K_P_reg", "K_S_reg"]);
    }
    let mut table = Table::new(header);
    table.rows = rows(&ks, |k| {
        let ctx = || format!("kernel at k = {k:e}");
        let mut row = vec![
            k,
            kernel_p_exact(p, t, k, z, z0).context(ctx)?,
            kernel_p_asymptotic(p, t, k, z, z0).context(ctx)?,
            kernel_s(p, t, k, z, z0, method, &cfg.quad).context(ctx)?,
        ];
        if regularized {
            row.push(kernel_p_regularized(p, t, k, z, z0, cfg.dt, cfg.chi).context(ctx)?);
            row.push(kernel_s_regularized(p, t, k, z, z0, cfg.dt, cfg.chi, method, &cfg.quad).context(ctx)?);
        }
        Ok(row)
    })?;
    let prov = Provenance::new("kernel", cfg)
        .with("z", format!("{z:e}"))
        .with("T", format!("{t:e}"))
        .with("k", k.map_or("auto".into(), |g| g.to_string()))
        .with("method", format!("{method:?}"));
    emit(out, "kernel.csv", &prov, &table)
}

/// Settings of `psf-plasmon`.
#[derive(Debug, Clone, Copy)]
pub struct PlasmonRequest {
    pub zeta: Option<f64>,
    pub z: Option<GridSpec>,
    pub r: Option<GridSpec>,
    pub dt: Option<f64>,
    pub path: RegularizedPath,
    pub asymptotic: bool,
}

/// Rows `r, z, value, value_normalized`, with `value` ordered by height then radius.
fn psf_rows(field: &psf::PsfField, norms: &[f64]) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(field.values.len());
    for (j, &z) in field.z.iter().enumerate() {
        for (i, &r) in field.r.iter().enumerate() {
            let v = field.at(i, j);
            out.push(vec![r, z, v, v / norms[j]]);
        }
    }
    out
}

pub fn psf_plasmon(cfg: &RunConfig, out: Option<&Path>, req: PlasmonRequest) -> Result<(), CliError> {
    let p = &cfg.params;
    let l = p.ell0();
    let u_c = p.critical_u().context(|| "critical wavenumber".into())?;
    let z0 = match req.zeta {
        Some(zeta) if zeta > 0.0 => zeta * l / (cfg.xi * u_c),
        Some(zeta) => return Err(CliError::Config(format!("--zeta must be positive, got {zeta}"))),
        None => cfg.z0,
    };
    let source = cfg.source(z0)?;
    let t = cfg.t_mirror(z0);
    let zs = req.z.unwrap_or(GridSpec::single(0.0)).values();
    let rs = req.r.unwrap_or(GridSpec::new(0.0, 40.0 * l, 201)).values();
    let dt = req.dt.unwrap_or(cfg.dt);
    let spec = cfg.quad;
    let field = psf::grid(&rs, &zs, PsfKind::Plasmonic, Some(1.0), |r, z| {
        if dt > 0.0 {
            psf::jp_regularized(p, &source, t, r, z, dt, cfg.chi, req.path, &spec)
        } else if req.asymptotic {
            psf::jp_asymptotic(p, &source, t, r, z, &spec)
        } else {
            psf::jp_exact(p, &source, t, r, z, &spec)
        }
    })
    .context(|| "psf-plasmon".into())?;
    // each height is normalized by the exact instantaneous value on the axis
    let norms: Vec<f64> = zs
        .par_iter()
        .map(|&z| psf::jp_exact(p, &source, t, 0.0, z, &spec))
        .collect::<Result<_, _>>()
        .context(|| "psf-plasmon normalization".into())?;
    let mut table = Table::new(["r", "z", "value", "value_normalized"]);
    table.rows = psf_rows(&field, &norms);
    let prov = Provenance::new("psf-plasmon", cfg)
        .with("zeta", req.zeta.map_or("none".into(), |z| format!("{z:e}")))
        .with("source_z0", format!("{z0:e}"))
        .with("T_resolved", format!("{t:e}"))
        .with("grid_r", req.r.map_or("auto".into(), |g| g.to_string()))
        .with("grid_z", req.z.map_or("auto".into(), |g| g.to_string()))
        .with("dt_resolved", format!("{dt:e}"))
        .with("path", format!("{:?}", req.path))
        .with("asymptotic", req.asymptotic);
    emit(out, "psf_plasmon.csv", &prov, &table)
}

/// `n` cell midpoints of `(a, b)`.
pub fn midpoints(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / n as f64;
    (0..n).map(|i| a + h * (i as f64 + 0.5)).collect()
}

pub fn psf_scattered(
    cfg: &RunConfig,
    out: Option<&Path>,
    z: Option<GridSpec>,
    r: Option<GridSpec>,
    dt: Option<f64>,
) -> Result<(), CliError> {
    let p = &cfg.params;
    let z0 = cfg.z0;
    let source = cfg.source(z0)?;
    let t = cfg.t_mirror(z0);
    let ct = p.c() * t;
    let zs = match z {
        Some(g) => g.values(),
        None => midpoints(0.0, (2.0 * z0).min(ct), 100),
    };
    let rs = r.unwrap_or(GridSpec::new(0.0, 10.0 * p.ell0(), 101)).values();
    let dt = dt.unwrap_or(cfg.dt);
    let spec = cfg.quad;
    let field = psf::grid(&rs, &zs, PsfKind::Scattered, None, |r, z| {
        psf::js_regularized(p, &source, t, r, z, dt, cfg.chi, &spec)
    })
    .context(|| "psf-scattered".into())?;
    let norms = vec![field.normalization; zs.len()];
    let mut table = Table::new(["r", "z", "value", "value_normalized"]);
    table.rows = psf_rows(&field, &norms);
    let prov = Provenance::new("psf-scattered", cfg)
        .with("T_resolved", format!("{t:e}"))
        .with("grid_r", r.map_or("auto".into(), |g| g.to_string()))
        .with("grid_z", z.map_or("auto".into(), |g| g.to_string()))
        .with("dt_resolved", format!("{dt:e}"));
    emit(out, "psf_scattered.csv", &prov, &table)
}

pub fn field_decompose(
    cfg: &RunConfig,
    out: Option<&Path>,
    z: Option<f64>,
    k: Option<GridSpec>,
    method: KernelMethod,
) -> Result<(), CliError> {
    let p = &cfg.params;
    let z0 = cfg.z0;
    let z = z.unwrap_or(z0);
    let source = cfg.source(z0)?;
    let t = cfg.t_mirror(z0);
    let k_min = source.k_min(p).context(|| "source".into())?;
    let ks = k.map_or_else(|| GridSpec::new(1.01 * k_min, 10.0 * k_min, 50).values(), |g| g.values());
    let mut header = vec!["k".to_string()];
    for tag in ["unperturbed_pole", "unperturbed_branch", "P", "S", "F", "M"] {
        header.push(format!("{tag}_re"));
        header.push(format!("{tag}_im"));
    }
    let mut table = Table::new(header);
    table.rows = rows(&ks, |k| {
        let ctx = || format!("field decomposition at k = {k:e}");
        let pole = unperturbed_pole_field(p, &source, t, k).context(ctx)?;
        let branch = unperturbed_branch_field(p, &source, t, k, &cfg.quad).context(ctx)?;
        let parts = perturbed_components(p, &source, t, k, z, method, &cfg.quad).context(ctx)?;
        let mut row = vec![k];
        for c in [pole, branch].into_iter().chain(parts.all()) {
            row.push(c.value.re);
            row.push(c.value.im);
        }
        Ok(row)
    })?;
    let prov = Provenance::new("field-decompose", cfg)
        .with("z", format!("{z:e}"))
        .with("T_resolved", format!("{t:e}"))
        .with("k", k.map_or("auto".into(), |g| g.to_string()))
        .with("method", format!("{method:?}"));
    emit(out, "field_decompose.csv", &prov, &table)
}
