"""The operation names of the interface description resolve to working functions."""
from borelideals import cli, dseries, ideals, lattice, symmspace, weyl
from borelideals.rootsys import Point, build_root_system


def test_weyl_names():
    rs = build_root_system("A2")
    om1 = rs.fundamental_coweights[0]
    assert weyl.act(weyl.ExtAffineElt.translation(rs, om1), Point.zero(2)) == om1
    s0 = weyl.ExtAffineElt.simple(rs, 0)
    assert weyl.inversion_set_affine(s0) == {weyl.AffineRoot((-1, -1), 1)}
    assert weyl.in_W_orbit_of_alcove(rs, om1 * 2, 2)
    assert len(weyl.omega_r(rs, 2)) == 3 and len(weyl.sigma(build_root_system("A3"))) == 4
    # the documented A2 example: t_{-w1} w_0^1 w_0 sends 0 to -w1
    assert lattice.sigma_act(rs, 1, Point.zero(2)) == -om1


def test_ideal_names():
    rs = build_root_system("A2")
    top = ideals.Ideal.from_roots(rs, [(1, 1)])
    assert ideals.w_to_ideal(ideals.ideal_to_w(top)) == top
    assert ideals.L_of_ideal(top) == ideals.ideal_to_w(top).inversion_set()


def test_lattice_names():
    rs = build_root_system("A2")
    assert len(lattice.enumerate_Ztilde(rs)) == 15 and len(lattice.enumerate_Z(rs)) == 5
    assert len(lattice.enumerate_Ztilde_ab(rs)) == 12 and len(lattice.enumerate_Z_ab(rs)) == 4
    z = rs.fundamental_coweights[0] * -2
    assert lattice.v_of_z(rs, z).inversion_set() == {(1, 0), (1, 1)}
    assert lattice.dom(rs, z) == rs.fundamental_coweights[1] * 2
    orbit = {lattice.sigma_act(rs, j, Point.zero(2)) for j in (0, 1, 2)}
    assert orbit == {Point.zero(2), -rs.fundamental_coweights[0], -rs.fundamental_coweights[1]}
    a1 = build_root_system("A1")
    om = a1.fundamental_coweights[0]
    assert lattice.F_tilde(a1, om) == weyl.ExtAffineElt.translation(a1, om)
    assert lattice.F(a1, om).inversion_set() == {weyl.AffineRoot((-1,), 1)}
    assert lattice.H(a1, om)[1] == 0


def test_symmspace_names():
    rs = build_root_system("A2")
    assert len(symmspace.enumerate_X(rs)) == 6
    assert [t.label for t in symmspace.table_I(build_root_system("G2"))[2]] == ["w2"]
    assert len(symmspace.fiber_Ztilde_tau(rs, "w1+w2")) == 3
    assert len(symmspace.fiber_Zhat_tau(rs, "w1+w2")) == 4
    assert len(symmspace.cmpt_fiber(build_root_system("D4"), "w2")["compatible"]) == 4
    assert len(symmspace.submodules_bp(rs, "w1+w2")) == 4
    assert len(symmspace.abelian_submodules_bp(rs, "w1+w2")) == 3


def test_dseries_names():
    rs = build_root_system("A2")
    hc = dseries.parameter_at(rs, symmspace.abelian_fiber(rs, "w1+w2")[0])
    mu = dseries.minimal_k_type(hc)
    assert dseries.k_multiplicity(mu, hc, 0) == 1
    assert dseries.cohom_degree(rs, Point.zero(2)) == 0
    assert len(dseries.sym_power_weights([(1, 0), (0, 1)], 2, 2)) == 3
    assert dseries.m_decompose(dseries.sym_power_weights([], 0, 2), dseries.levi_datum(hc)) == {Point.zero(2): 1}
    assert dseries.e6_example is dseries.e6_type3_report


def test_cli_run(capsys):
    assert cli.run(["ideals", "count", "--type", "A", "--rank", "3", "--abelian"]) == 0
    assert capsys.readouterr().out == "8\n"
