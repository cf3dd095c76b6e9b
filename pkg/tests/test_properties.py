import numpy as np
import pytest

from planarfrac.errors import ConfigError
from planarfrac.properties import InjectionSchedule, config_to_dict, validate


def radial_raw(**sim_extra):
    sim = {"end_time": 100.0}
    sim.update(sim_extra)
    return {
        "mesh": {"x_min": -5, "x_max": 5, "y_min": -5, "y_max": 5,
                 "nx": 41, "ny": 41},
        "material": {"e_prime": 35.2e9, "k_ic": 0.156e6, "cl": 0.5e-6,
                     "sigma0": 1e6},
        "fluid": {"viscosity": 8.3e-5},
        "injection": {"rate": 0.01, "location": [0.0, 0.0]},
        "sim": sim,
    }


def test_reference_parameter_set_validates():
    cfg = validate(radial_raw())
    assert cfg.material.e_prime == 35.2e9
    assert np.all(cfg.material.k_ic == 0.156e6)
    assert np.all(cfg.material.c_l == 0.5e-6)
    assert cfg.fluid.viscosity == 8.3e-5
    assert cfg.injection.rate_at(50.0) == 0.01
    assert cfg.sim.ehl_tol == 1e-6 and cfg.sim.front_tol == 1e-3
    assert cfg.material.w_r == 1e-6  # residual aperture default


def test_negative_viscosity_rejected_with_path():
    raw = radial_raw()
    raw["fluid"]["viscosity"] = -1.0
    with pytest.raises(ConfigError) as err:
        validate(raw)
    assert any("fluid.viscosity" in e and ">= 0" in e for e in err.value.errors)


def test_error_aggregation():
    raw = radial_raw()
    raw["fluid"]["viscosity"] = -1.0
    raw["material"]["e_prime"] = 0.0
    raw["sim"]["remesh_factor"] = 0.5
    with pytest.raises(ConfigError) as err:
        validate(raw)
    assert len(err.value.errors) >= 3


def test_layered_stress_field():
    raw = radial_raw()
    raw["mesh"] = {"x_min": -20, "x_max": 20, "y_min": -2.3, "y_max": 2.3,
                   "nx": 125, "ny": 35}
    raw["material"]["sigma0"] = {"breaks": [-1.15, 1.15],
                                 "values": [7.5e6, 1.0e6, 7.5e6]}
    cfg = validate(raw)
    y = cfg.mesh.cell_centers[:, 1]
    assert np.all(cfg.material.sigma0[np.abs(y) < 1.1] == 1.0e6)
    assert np.all(cfg.material.sigma0[y > 1.2] == 7.5e6)
    assert np.all(cfg.material.sigma0[y < -1.2] == 7.5e6)


def test_per_cell_array_field():
    raw = radial_raw()
    n = 41 * 41
    raw["material"]["cl"] = [1e-6] * n
    cfg = validate(raw)
    assert cfg.material.c_l.shape == (n,)
    raw["material"]["cl"] = [1e-6] * (n - 1)
    with pytest.raises(ConfigError):
        validate(raw)


def test_unknown_key_strict_vs_lax():
    raw = radial_raw()
    raw["sim"]["viscocity"] = 1.0
    with pytest.raises(ConfigError) as err:
        validate(raw, strict=True)
    assert any("viscocity" in e for e in err.value.errors)
    cfg = validate(raw, strict=False)  # warned-and-dropped
    assert not hasattr(cfg.sim, "viscocity")


def test_schedule_semantics():
    sched = InjectionSchedule(np.array([0.0, 500.0]), np.array([2000.0, 0.0]))
    assert sched.rate_at(0.0) == 2000.0
    assert sched.rate_at(499.9) == 2000.0
    assert sched.rate_at(500.0) == 0.0
    assert sched.volume_between(0.0, 500.0) == pytest.approx(1e6)
    assert sched.volume_between(499.0, 501.0) == pytest.approx(2000.0)
    assert sched.next_change_after(0.0) == 500.0
    assert sched.next_change_after(500.0) == np.inf


def test_schedule_validation():
    raw = radial_raw()
    raw["injection"] = {"schedule": [[0.0, 1.0], [0.0, 2.0]]}
    with pytest.raises(ConfigError):
        validate(raw)
    raw["injection"] = {"schedule": [[0.0, -1.0]]}
    with pytest.raises(ConfigError):
        validate(raw)


def test_source_location_inside_mesh():
    raw = radial_raw()
    raw["injection"]["location"] = [100.0, 0.0]
    with pytest.raises(ConfigError) as err:
        validate(raw)
    assert any("location" in e for e in err.value.errors)


def test_round_trip_semantics():
    raw = radial_raw(snapshot_times=[1.0, 10.0])
    raw["material"]["sigma0"] = {"breaks": [0.0], "values": [1e6, 2e6]}
    cfg = validate(raw)
    d = config_to_dict(cfg)
    cfg2 = validate(d, strict=False)
    assert np.array_equal(cfg.material.sigma0, cfg2.material.sigma0)
    assert np.array_equal(cfg.injection.times, cfg2.injection.times)
    assert cfg.sim == cfg2.sim
    assert (cfg.mesh.nx, cfg.mesh.dx) == (cfg2.mesh.nx, cfg2.mesh.dx)


def test_grain_size_stored_unused():
    raw = radial_raw()
    raw["material"]["grain_size"] = 2e-4
    cfg = validate(raw)
    assert cfg.material.grain_size == 2e-4


def test_material_resample_layers():
    raw = radial_raw()
    raw["material"]["sigma0"] = {"breaks": [0.0], "values": [1e6, 3e6]}
    cfg = validate(raw)
    bigger = cfg.mesh.scaled(2.0)
    mat2 = cfg.material.resample(bigger)
    y = bigger.cell_centers[:, 1]
    assert np.all(mat2.sigma0[y > 0.1] == 3e6)
    assert np.all(mat2.sigma0[y < -0.1] == 1e6)
