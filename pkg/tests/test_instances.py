"""Instance generation determinism and the flat file format."""

import pytest

from detf5.instances import (
    Instance,
    InstanceFormatError,
    InstanceSpec,
    random_crit_instance,
    random_minors_instance,
    read_instance,
    write_instance,
)


class TestSpecs:
    def test_validation(self):
        with pytest.raises(ValueError):
            InstanceSpec(n=1, p=1, q=2, d0=1)
        with pytest.raises(ValueError):
            InstanceSpec(n=3, p=3, q=2, d0=1)
        with pytest.raises(ValueError):
            InstanceSpec(n=3, p=0, q=2, d0=1)
        with pytest.raises(ValueError):
            InstanceSpec(n=3, p=1, q=2, d0=0)

    def test_crit_needs_room_for_jacobian(self):
        with pytest.raises(ValueError):
            random_crit_instance(InstanceSpec(n=2, p=2, q=2, d0=2))


class TestGeneration:
    def test_minors_shape_and_determinism(self):
        spec = InstanceSpec(n=3, p=2, q=4, d0=2, seed=7)
        a = random_minors_instance(spec)
        b = random_minors_instance(spec)
        assert a.kind == "matrix"
        assert a.matrix.p == 2 and a.matrix.q == 4
        for ra, rb in zip(a.matrix.entries, b.matrix.entries):
            for fa, fb in zip(ra, rb):
                assert fa.terms == fb.terms
                assert fa.degree == 2

    def test_seed_changes_instance(self):
        s0 = InstanceSpec(n=3, p=2, q=4, d0=2, seed=0)
        s1 = InstanceSpec(n=3, p=2, q=4, d0=2, seed=1)
        a = random_minors_instance(s0)
        b = random_minors_instance(s1)
        assert any(
            fa.terms != fb.terms
            for ra, rb in zip(a.matrix.entries, b.matrix.entries)
            for fa, fb in zip(ra, rb)
        )

    def test_crit_shape(self):
        inst = random_crit_instance(InstanceSpec(n=4, p=2, q=4, d0=2, seed=3))
        assert inst.kind == "system"
        assert inst.g.degree == 2
        assert len(inst.F) == 2
        assert inst.q == inst.n


class TestRoundTrip:
    def test_matrix_file_byte_identical(self, tmp_path):
        spec = InstanceSpec(n=3, p=2, q=3, d0=2, seed=5)
        inst = random_minors_instance(spec)
        p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
        write_instance(inst, str(p1))
        write_instance(read_instance(str(p1)), str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_system_file_byte_identical(self, tmp_path):
        spec = InstanceSpec(n=3, p=1, q=3, d0=2, seed=5)
        inst = random_crit_instance(spec)
        p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
        write_instance(inst, str(p1))
        write_instance(read_instance(str(p1)), str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_header_layout(self, tmp_path):
        inst = random_minors_instance(InstanceSpec(n=2, p=1, q=2, d0=1, seed=0))
        path = tmp_path / "m.txt"
        write_instance(inst, str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == "prime 65521"
        assert lines[1] == "nvars 2"
        assert lines[2] == "matrix 1 2 degree 1"
        assert len(lines) == 3 + 2

    def test_system_lists_objective_first(self, tmp_path):
        inst = random_crit_instance(InstanceSpec(n=3, p=2, q=3, d0=2, seed=1))
        path = tmp_path / "s.txt"
        write_instance(inst, str(path))
        lines = path.read_text().splitlines()
        assert lines[2] == "system 2 degree 2"
        back = read_instance(str(path))
        assert back.g.terms == inst.g.terms


class TestFormatErrors:
    def write(self, tmp_path, text):
        path = tmp_path / "bad.txt"
        path.write_text(text)
        return str(path)

    def test_too_short(self, tmp_path):
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, "prime 65521\nnvars 2\n"))

    def test_bad_prime_line(self, tmp_path):
        text = "modulus 65521\nnvars 2\nmatrix 1 2 degree 1\n1*x1\n1*x2\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_bad_kind(self, tmp_path):
        text = "prime 65521\nnvars 2\nideal 1 2 degree 1\n1*x1\n1*x2\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_wrong_entry_count(self, tmp_path):
        text = "prime 65521\nnvars 2\nmatrix 1 2 degree 1\n1*x1\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_wrong_declared_degree(self, tmp_path):
        text = "prime 65521\nnvars 2\nmatrix 1 2 degree 2\n1*x1\n1*x2\n"
        with pytest.raises(ValueError):
            read_instance(self.write(tmp_path, text))

    def test_system_degree_mismatch(self, tmp_path):
        text = "prime 65521\nnvars 2\nsystem 1 degree 2\n1*x1^2\n1*x2\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_non_integer_header(self, tmp_path):
        text = "prime sixty\nnvars 2\nmatrix 1 2 degree 1\n1*x1\n1*x2\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_garbage_polynomial(self, tmp_path):
        text = "prime 65521\nnvars 2\nmatrix 1 2 degree 1\n1*x1\nnot a poly\n"
        with pytest.raises(InstanceFormatError):
            read_instance(self.write(tmp_path, text))

    def test_blank_lines_tolerated(self, tmp_path):
        text = "prime 65521\n\nnvars 2\nmatrix 1 2 degree 1\n\n1*x1\n1*x2\n\n"
        inst = read_instance(self.write(tmp_path, text))
        assert inst.kind == "matrix"
