from __future__ import annotations

import json
import shutil
from itertools import combinations
from math import comb

import pytest

from bblab import constructions as C
from bblab.bounds import check_stanley_cm
from bblab.complex import euler_characteristic, f_vector, g2_from_f, h_vector, is_neighborly
from bblab.constructions import (
    CORPUS,
    CorpusError,
    HandleError,
    corpus_complex,
    corpus_names,
    cyclic_polytope_boundary,
    hd_connected_sum,
    hd_handle,
    hd_subdivide_facet,
    simplex_boundary,
    small_manifold,
    stacked_sphere,
)
from bblab.homology import is_cohen_macaulay, is_homology_manifold, is_orientable_over, reduced_betti


def test_simplex_boundary():
    assert f_vector(simplex_boundary(3)) == (1, 4, 6, 4)
    assert simplex_boundary(1).facets == ((1,), (2,))
    for d in range(1, 6):
        assert h_vector(f_vector(simplex_boundary(d))) == (1,) * (d + 1)
    with pytest.raises(ValueError):
        simplex_boundary(0)


def cyclic_facet_count(d, n):
    m = d // 2
    if d % 2 == 0:
        return n * comb(n - m, m) // (n - m)
    return 2 * comb(n - m - 1, m)


@pytest.mark.parametrize("d,n", [(2, 5), (3, 6), (3, 7), (4, 7), (4, 8), (5, 8), (6, 9)])
def test_cyclic(d, n):
    K = cyclic_polytope_boundary(d, n)
    assert len(K.facets) == cyclic_facet_count(d, n)
    assert is_neighborly(K, d // 2 - 1)
    assert reduced_betti(K, 2).beta(d - 1) == 1


def test_cyclic_examples():
    assert f_vector(cyclic_polytope_boundary(4, 7))[2] == 21
    K = cyclic_polytope_boundary(2, 6)
    assert f_vector(K) == (1, 6, 6)
    K8 = cyclic_polytope_boundary(4, 8)
    assert is_cohen_macaulay(K8, 32003) and check_stanley_cm(h_vector(f_vector(K8))).passed
    with pytest.raises(ValueError):
        cyclic_polytope_boundary(4, 4)


def test_stacked():
    assert stacked_sphere(3, 4).facets == simplex_boundary(3).facets
    for d, n in [(3, 10), (4, 8), (5, 9)]:
        K = stacked_sphere(d, n)
        h = h_vector(f_vector(K))
        assert h == (1,) + (n - d,) * (d - 1) + (1,)
        assert g2_from_f(f_vector(K), d) == 0
        assert is_homology_manifold(K, 2)


def test_subdivide():
    K = simplex_boundary(3)
    L = hd_subdivide_facet(K, (1, 2, 3))
    assert f_vector(L) == (1, 5, 9, 6)
    with pytest.raises(Exception):
        hd_subdivide_facet(K, (1, 2))


def test_connected_sum_of_simplices():
    for d in (3, 4):
        S = simplex_boundary(d)
        F = tuple(range(1, d + 1))
        K = hd_connected_sum(S, S, F, F)
        f = f_vector(S)
        want = tuple(2 * f[k] - (comb(d, k) if k < d else 2) for k in range(d + 1))
        assert f_vector(K)[1:] == want[1:]
        assert reduced_betti(K, 2).entries == reduced_betti(S, 2).entries
        assert is_homology_manifold(K, 2)


def test_handle_example():
    H = C.handle_4()
    assert H.n == 10
    assert f_vector(H) == (1, 10, 40, 60, 30)
    assert g2_from_f(f_vector(H), 4) == 10
    for p in (2, 3):
        assert reduced_betti(H, p).entries == (0, 0, 1, 1, 1)
        assert is_homology_manifold(H, p) and is_orientable_over(H, p)
    # swapping two identifications gives the non-orientable bundle
    K = stacked_sphere(4, 14)
    T = hd_handle(K, (1, 2, 3, 4), (11, 12, 13, 14), {1: 11, 2: 12, 3: 14, 4: 13})
    assert reduced_betti(T, 2).beta(1) == 1 and not is_orientable_over(T, 3)


def test_handle_adds_one_loop():
    K = stacked_sphere(4, 14)
    H = C.handle_4()
    b0, b1 = reduced_betti(K, 2).entries, reduced_betti(H, 2).entries
    assert tuple(b - a for a, b in zip(b0, b1))[:3] == (0, 0, 1)


def test_handle_too_close():
    K = stacked_sphere(4, 14)
    with pytest.raises(HandleError, match="distance"):
        hd_handle(K, (1, 2, 3, 4), (11, 12, 13, 14), {1: 14, 2: 13, 3: 12, 4: 11})
    with pytest.raises(HandleError, match="disjoint"):
        hd_handle(K, (1, 2, 3, 4), (2, 3, 4, 6))


def test_handle_sums():
    for m in (1, 2, 3):
        K = C.handle_sum(m)
        assert g2_from_f(f_vector(K), 4) == 10 * m
    K = C.handle_sum(2)
    assert K.n == 16 and reduced_betti(K, 2).beta(1) == 2


def test_small_manifolds():
    T = small_manifold("torus_7")
    assert f_vector(T) == (1, 7, 21, 14)
    assert euler_characteristic(small_manifold("rp2_6")) == 1
    K = small_manifold("klein_8")
    assert euler_characteristic(K) == 0 and is_homology_manifold(K, 3) and not is_orientable_over(K, 3)
    with pytest.raises(CorpusError):
        small_manifold("cp2_9")


def test_manifest_matches():
    sums = json.loads((C.DATA_DIR / C.MANIFEST).read_text())
    assert set(sums) == {"torus_7.json", "rp2_6.json", "klein_8.json"}
    for name, digest in sums.items():
        assert C._sha256(C.DATA_DIR / name) == digest


def test_corpus_dir_override(tmp_path, monkeypatch):
    shutil.copytree(C.DATA_DIR, tmp_path / "corpus")
    monkeypatch.setenv(C.CORPUS_ENV, str(tmp_path / "corpus"))
    assert f_vector(small_manifold("torus_7")) == (1, 7, 21, 14)
    doc = json.loads((tmp_path / "corpus" / "rp2_6.json").read_text())
    doc["facets"] = doc["facets"][:-1]
    (tmp_path / "corpus" / "rp2_6.json").write_text(json.dumps(doc))
    with pytest.raises(CorpusError, match="checksum"):
        small_manifold("rp2_6")


@pytest.mark.parametrize("name", corpus_names())
def test_corpus_expected(name):
    e = CORPUS[name]
    K = corpus_complex(name)
    if "f" in e.expected:
        assert f_vector(K) == e.expected["f"]
    assert euler_characteristic(K) == e.expected["chi"]
    if "g2" in e.expected:
        assert g2_from_f(f_vector(K), K.d) == e.expected["g2"]
    assert is_homology_manifold(K, 2)


def test_upper_bound_spot_check():
    for name in corpus_names("sphere"):
        K = corpus_complex(name)
        if K.d != 4:
            continue
        top = f_vector(cyclic_polytope_boundary(4, K.n))
        assert all(a <= b for a, b in zip(f_vector(K), top))


def test_gale_evenness_by_definition():
    # facets of C_4(7) as a check against the evenness rule written out directly
    K = cyclic_polytope_boundary(4, 7)
    for S in combinations(range(1, 8), 4):
        gaps = [v for v in range(1, 8) if v not in S]
        even = all(sum(1 for v in S if a < v < b) % 2 == 0 for a, b in zip(gaps, gaps[1:]))
        assert (S in K.facets) == even
