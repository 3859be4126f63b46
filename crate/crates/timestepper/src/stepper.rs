use crate::propagator::{apply, build_propagator, generator, LinearPropagator, Mat2};
use crate::{Result, StepError};
use hydro_model::{guard, GuardThresholds, HoloState, LinState, Model};
use paracalc::{control_norms, EPS, EPS_SHARP};
use spectral_core::{ComplexField, SpectralGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Etdrk4,
    Ifrk4,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Dt {
    Fixed(f64),
    /// Controller-chosen step, never above the given value.
    Adaptive(f64),
    /// This many equal steps over the run.
    Steps(usize),
}

/// Spectral filter `exp(ln(strength)·(|k|/k_max)^order)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Filter {
    pub strength: f64,
    pub order: i32,
}

impl Default for Filter {
    fn default() -> Self {
        Self { strength: 1e-36, order: 8 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegratorConfig {
    pub dt: Dt,
    pub t_final: f64,
    pub scheme: Scheme,
    pub dealias_fraction: f64,
    pub filter: Option<Filter>,
    pub guard: GuardThresholds,
    /// Hooks run every this many steps (and at the start and end).
    pub snapshot_every: usize,
    /// Zero positive wavenumbers after every step.
    pub project_holo: bool,
    /// Test hook: `false` drops the nonlinear remainder entirely.
    pub nonlinear: bool,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            dt: Dt::Fixed(1e-3),
            t_final: 1.0,
            scheme: Scheme::Etdrk4,
            dealias_fraction: 0.5,
            filter: Some(Filter::default()),
            guard: GuardThresholds::default(),
            snapshot_every: 100,
            project_holo: false,
            nonlinear: true,
        }
    }
}

impl IntegratorConfig {
    /// Linear flow only: no filter, and no guard (the linear flow is defined
    /// for any amplitude).
    pub fn linear(dt: f64, t_final: f64) -> Self {
        let guard = GuardThresholds { delta: 0.0, a0_max: f64::INFINITY, leakage: f64::INFINITY };
        Self { dt: Dt::Fixed(dt), t_final, filter: None, nonlinear: false, guard, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let dt = match self.dt {
            Dt::Fixed(v) | Dt::Adaptive(v) => v,
            Dt::Steps(n) => n as f64,
        };
        if !(dt > 0.0) {
            return Err(StepError::Config(format!("dt must be positive (got {dt})")));
        }
        if !(self.t_final >= 0.0) {
            return Err(StepError::Config(format!("T_final must be non-negative (got {})", self.t_final)));
        }
        if !(self.dealias_fraction > 0.0 && self.dealias_fraction <= 1.0) {
            return Err(StepError::Config(format!("dealias fraction must lie in (0, 1] (got {})", self.dealias_fraction)));
        }
        if self.snapshot_every == 0 {
            return Err(StepError::Config("snapshot_every must be at least 1".into()));
        }
        Ok(())
    }

    pub fn model(&self) -> Model {
        Model { delta: self.guard.delta, ..Model::default() }.with_dealias(self.dealias_fraction)
    }
}

/// `min(dt_user, 0.1/(1 + ‖b‖_∞·κ_max + 𝒜₀·κ_max^{3/2}))`.
pub fn suggest_dt(s: &HoloState, model: &Model, dt_user: f64) -> Result<f64> {
    let g = s.grid();
    let kmax = g.k_max() as f64 * g.scale();
    let b = model.aux_fields(s)?.b.max_abs();
    let a0 = control_norms(&s.w, &s.r, EPS, EPS_SHARP, &[0.0])[0].a;
    Ok(dt_user.min(0.1 / (1.0 + b * kmax + a0 * kmax.powf(1.5))))
}

type Pair = (ComplexField, ComplexField);

/// A fixed-step integrator for one grid and step size.
pub struct Stepper {
    pub prop: LinearPropagator,
    gen: Vec<Mat2>,
    model: Model,
    scheme: Scheme,
    filter: Option<Vec<f64>>,
    nonlinear: bool,
    project_holo: bool,
    dealias: f64,
}

impl Stepper {
    pub fn new(grid: SpectralGrid, dt: f64, cfg: &IntegratorConfig) -> Self {
        let filter = cfg.filter.map(|f| {
            let kmax = grid.k_max() as f64;
            (0..grid.n_modes())
                .map(|i| (f.strength.ln() * (grid.wavenumber(i).abs() as f64 / kmax).powi(f.order)).exp())
                .collect()
        });
        Self {
            prop: build_propagator(grid, dt),
            gen: (0..grid.n_modes()).map(|i| generator(&grid, i).0).collect(),
            model: cfg.model(),
            scheme: cfg.scheme,
            filter,
            nonlinear: cfg.nonlinear,
            project_holo: cfg.project_holo,
            dealias: cfg.dealias_fraction,
        }
    }

    pub fn dt(&self) -> f64 {
        self.prop.dt
    }

    /// Nonlinear remainder `mask(F(u) − Lu)`.
    fn remainder(&self, w: &ComplexField, r: &ComplexField) -> Result<(ComplexField, ComplexField)> {
        let g = *w.grid();
        if !self.nonlinear {
            return Ok((ComplexField::zeros(g), ComplexField::zeros(g)));
        }
        let s = HoloState { w: w.clone(), r: r.clone(), t: 0.0 };
        let f = self.model.rhs_nonlinear(&s)?;
        let (lw, lr) = apply(&self.gen, w, r);
        Ok(((&f.dw - &lw).dealias(self.dealias), (&f.dr - &lr).dealias(self.dealias)))
    }

    /// Linearized remainder `mask(rhs_linearized − L·lin)` around `s`.
    fn tangent_remainder(&self, s: &Pair, lin: &Pair) -> Result<Pair> {
        let g = *s.0.grid();
        if !self.nonlinear {
            return Ok((ComplexField::zeros(g), ComplexField::zeros(g)));
        }
        let bg = HoloState { w: s.0.clone(), r: s.1.clone(), t: 0.0 };
        let l = LinState { w: lin.0.clone(), r: lin.1.clone() };
        let f = self.model.rhs_linearized(&bg, &l)?;
        let (lw, lr) = apply(&self.gen, &lin.0, &lin.1);
        Ok(((&f.dw - &lw).dealias(self.dealias), (&f.dr - &lr).dealias(self.dealias)))
    }

    /// One step of the chosen scheme for a list of pairs sharing the linear
    /// part, with a joint remainder.
    fn advance(&self, u: &[Pair], rem: impl Fn(&[Pair]) -> Result<Vec<Pair>>) -> Result<Vec<Pair>> {
        let p = &self.prop;
        let h = p.dt;
        let ap = |m: &[Mat2], v: &[Pair]| -> Vec<Pair> { v.iter().map(|x| apply(m, &x.0, &x.1)).collect() };
        let comb = |terms: &[(f64, &[Pair])]| -> Vec<Pair> {
            (0..u.len())
                .map(|i| {
                    let mut w = ComplexField::zeros(*u[i].0.grid());
                    let mut r = w.clone();
                    for (c, v) in terms {
                        w += &v[i].0.scale_re(*c);
                        r += &v[i].1.scale_re(*c);
                    }
                    (w, r)
                })
                .collect()
        };
        let out = match self.scheme {
            Scheme::Etdrk4 => {
                let nu = rem(u)?;
                let eu = ap(&p.e2, u);
                let a = comb(&[(1.0, &eu), (1.0, &ap(&p.q, &nu))]);
                let na = rem(&a)?;
                let b = comb(&[(1.0, &eu), (1.0, &ap(&p.q, &na))]);
                let nb = rem(&b)?;
                let src = comb(&[(2.0, &nb), (-1.0, &nu)]);
                let c = comb(&[(1.0, &ap(&p.e2, &a)), (1.0, &ap(&p.q, &src))]);
                let nc = rem(&c)?;
                let nab = comb(&[(1.0, &na), (1.0, &nb)]);
                comb(&[(1.0, &ap(&p.e, u)), (1.0, &ap(&p.f1, &nu)), (2.0, &ap(&p.f2, &nab)), (1.0, &ap(&p.f3, &nc))])
            }
            Scheme::Ifrk4 => {
                let k1 = rem(u)?;
                let k2 = rem(&ap(&p.e2, &comb(&[(1.0, u), (h / 2.0, &k1)])))?;
                let k3 = rem(&comb(&[(1.0, &ap(&p.e2, u)), (h / 2.0, &k2)]))?;
                let k4 = rem(&comb(&[(1.0, &ap(&p.e, u)), (h, &ap(&p.e2, &k3))]))?;
                let k23 = comb(&[(1.0, &k2), (1.0, &k3)]);
                comb(&[(1.0, &ap(&p.e, u)), (h / 6.0, &ap(&p.e, &k1)), (h / 3.0, &ap(&p.e2, &k23)), (h / 6.0, &k4)])
            }
        };
        Ok(out.into_iter().map(|x| self.finish(x)).collect())
    }

    /// Filter and optional projection, applied once per step.
    fn finish(&self, (mut w, mut r): Pair) -> Pair {
        if let Some(f) = &self.filter {
            w = w.map_modes(|i, v| v * f[i]);
            r = r.map_modes(|i, v| v * f[i]);
        }
        if self.project_holo {
            let g = *w.grid();
            let keep = |i: usize, v| if g.wavenumber(i) > 0 { Default::default() } else { v };
            w = w.map_modes(keep);
            r = r.map_modes(keep);
        }
        (w, r)
    }

    pub fn step(&self, s: &HoloState) -> Result<HoloState> {
        let u = [(s.w.clone(), s.r.clone())];
        let mut out = self.advance(&u, |v| Ok(vec![self.remainder(&v[0].0, &v[0].1)?]))?;
        let (w, r) = out.pop().unwrap();
        Ok(HoloState { w, r, t: s.t + self.prop.dt })
    }

    /// Advances a background together with a linearized pair around it.
    pub fn step_tangent(&self, s: &HoloState, lin: &LinState) -> Result<(HoloState, LinState)> {
        let u = [(s.w.clone(), s.r.clone()), (lin.w.clone(), lin.r.clone())];
        let mut out = self.advance(&u, |v| {
            Ok(vec![self.remainder(&v[0].0, &v[0].1)?, self.tangent_remainder(&v[0], &v[1])?])
        })?;
        let (lw, lr) = out.pop().unwrap();
        let (w, r) = out.pop().unwrap();
        Ok((HoloState { w, r, t: s.t + self.prop.dt }, LinState { w: lw, r: lr }))
    }
}

/// One step of size `dt` with a freshly built propagator.
pub fn step(s: &HoloState, dt: f64, cfg: &IntegratorConfig) -> Result<HoloState> {
    Stepper::new(s.grid(), dt, cfg).step(s)
}

/// Outcome of [`evolve`]: the last state reached, the hook outputs and, if
/// the run stopped early, why.
#[derive(Debug)]
pub struct Trajectory<R> {
    pub last: HoloState,
    pub records: Vec<R>,
    pub steps: usize,
    pub error: Option<StepError>,
}

impl<R> Trajectory<R> {
    pub fn completed(&self) -> bool {
        self.error.is_none()
    }
}

/// Steps to `t_final`, calling `hook` at the start, every `snapshot_every`
/// steps and at the end. Guard violations stop the run; the partial
/// trajectory is kept.
pub fn evolve<R>(
    s0: &HoloState,
    cfg: &IntegratorConfig,
    mut hook: impl FnMut(&HoloState, usize) -> R,
) -> Result<Trajectory<R>> {
    cfg.validate()?;
    let mut records = vec![hook(s0, 0)];
    let rep = guard(s0, &cfg.guard);
    if let Some(v) = rep.fatal() {
        return Ok(Trajectory { last: s0.clone(), records, steps: 0, error: Some(StepError::Guard(v)) });
    }
    if cfg.t_final == 0.0 {
        return Ok(Trajectory { last: s0.clone(), records, steps: 0, error: None });
    }
    let t_end = s0.t + cfg.t_final;
    let mut s = s0.clone();
    let mut steps = 0;
    let mut since_hook = 0;
    let model = cfg.model();
    let plan = |s: &HoloState| -> Result<(f64, usize)> {
        let remaining = t_end - s.t;
        let target = match cfg.dt {
            Dt::Fixed(v) => v,
            Dt::Adaptive(v) => suggest_dt(s, &model, v)?,
            Dt::Steps(n) => return Ok((remaining / n as f64, n)),
        };
        let n = (remaining / target).ceil().max(1.0) as usize;
        Ok((remaining / n as f64, n))
    };
    let (mut dt, mut left) = plan(&s)?;
    let mut stepper = Stepper::new(s.grid(), dt, cfg);
    while left > 0 {
        let next = match stepper.step(&s) {
            Ok(v) => v,
            Err(e) => return Ok(Trajectory { last: s, records, steps, error: Some(e) }),
        };
        s = next;
        steps += 1;
        since_hook += 1;
        left -= 1;
        if left == 0 {
            s.t = t_end;
        }
        if since_hook == cfg.snapshot_every || left == 0 {
            since_hook = 0;
            records.push(hook(&s, steps));
            if let Some(v) = guard(&s, &cfg.guard).fatal() {
                let done = left == 0;
                return Ok(Trajectory { last: s, records, steps, error: (!done).then_some(StepError::Guard(v)) });
            }
            if matches!(cfg.dt, Dt::Adaptive(_)) && left > 0 {
                let (ndt, nleft) = plan(&s)?;
                if ndt != dt {
                    dt = ndt;
                    stepper = Stepper::new(s.grid(), dt, cfg);
                }
                left = nleft;
            }
        }
    }
    Ok(Trajectory { last: s, records, steps, error: None })
}

/// Background and linearized pair advanced together over `cfg.t_final`
/// with equal steps; hooks and snapshots are not used.
pub fn evolve_tangent(s0: &HoloState, lin0: &LinState, cfg: &IntegratorConfig) -> Result<(HoloState, LinState)> {
    cfg.validate()?;
    if let Some(v) = guard(s0, &cfg.guard).fatal() {
        return Err(StepError::Guard(v));
    }
    let n = match cfg.dt {
        Dt::Steps(n) => n,
        Dt::Fixed(v) | Dt::Adaptive(v) => (cfg.t_final / v).ceil().max(1.0) as usize,
    };
    let st = Stepper::new(s0.grid(), cfg.t_final / n as f64, cfg);
    let (mut s, mut l) = (s0.clone(), lin0.clone());
    for _ in 0..n {
        (s, l) = st.step_tangent(&s, &l)?;
    }
    s.t = s0.t + cfg.t_final;
    Ok((s, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_table_in_fft_order() {
        let g = SpectralGrid::standard(64).unwrap();
        let st = Stepper::new(g, 0.1, &IntegratorConfig::default());
        let f = st.filter.as_ref().unwrap();
        assert_eq!(f[0], 1.0);
        assert!((f[g.index_of(-1).unwrap()] - 1.0).abs() < 1e-10);
        assert!((f[g.index_of(32).unwrap()] / 1e-36 - 1.0).abs() < 1e-12);
        assert_eq!(f[g.index_of(-5).unwrap()], f[g.index_of(5).unwrap()]);
    }
}
