"""
Script para ejecutar la suite de aceptación completa sobre la biblioteca

Uso: python -m scripts.run_acceptance
"""
from itertools import product
import sys
import time
import numpy as np
from app.algorithms import diagnostics
from app.algorithms.counting import count_paths_few_endpoints, count_paths_strongly_few
from app.algorithms.recognizer import recognize_stcon_sf
from app.graphs.generators import disjoint_union, gen_chain_figure1, gen_diamond_chain, gen_random_dag
from app.graphs.layering import layer_graph, layered_index
from app.graphs.oracle import count_paths_oracle, exact_counts
from app.graphs.random_walk import random_walk_hit_probability
from app.graphs.unambiguity import in_stcon_sf
from app.linalg.laplacian import counting_laplacian
from app.linalg.decomposition import svd
from app.models.graph import DirectedGraph
from app.models.quantum import NoiseModel
from app.utils.seeding import make_rng

SEED = 2024
MAX_CERTIFIED = 10 ** 3
NOISY_INSTANCES = 10
NOISY_REPETITIONS = 50

def certified_dags(count: int, max_n: int, seed: int):
    """DAGs aleatorios con max N ≤ 10³ y su matriz de conteos"""
    rng = make_rng(seed)
    found = []
    attempt = 0
    while len(found) < count:
        n = int(rng.integers(2, max_n + 1))
        density = float(rng.choice([0.05, 0.1, 0.2]))
        g = gen_random_dag(n, density, seed + attempt)
        attempt += 1
        counts = count_paths_oracle(g, cap=MAX_CERTIFIED + 1)
        max_count = counts.max_count()
        if max_count.is_finite and max_count.value <= MAX_CERTIFIED:
            found.append((g, counts, max_count.value))
    return found

def sample_pairs(n: int, size: int, rng):
    return [(int(s), int(t)) for s, t in rng.integers(0, n, size=(size, 2))]

def criterion_oracle_equivalence(corpus, noise: NoiseModel):
    rng = make_rng(SEED)
    checked = wrong = 0
    for g, counts, P in corpus:
        for s, t in sample_pairs(g.n, 100, rng):
            result = count_paths_strongly_few(g, s, t, P, noise, seed=SEED + checked)
            checked += 1
            wrong += int(result.count != counts[s, t].value)
    return wrong == 0, f"{checked} pares, {wrong} desacuerdos"

def criterion_few_endpoints():
    rng = make_rng(SEED + 3)
    checked = wrong = conditioned = truncation = 0
    for index in range(50):
        m = 15 + index % 6
        base = gen_random_dag(int(rng.integers(3, 9)), 0.3, SEED + index)
        g = disjoint_union(base, gen_diamond_chain(m))
        counts = exact_counts(g)
        s, t = 0, base.n - 1
        P = max(1, max(counts[s]), max(row[t] for row in counts))
        conditioned += int(svd(counting_laplacian(g)).sigma_min < 1 / (g.n * MAX_CERTIFIED))
        result = count_paths_few_endpoints(g, s, t, P, NoiseModel.exact())
        wrong += int(result.count != counts[s][t])
        truncation += int(not diagnostics.truncation_error(counts[s][t], result).holds)
        checked += 1
    ok = wrong == 0 and truncation == 0 and conditioned == checked
    return ok, f"{checked} instancias, {wrong} desacuerdos, {conditioned} mal condicionadas, {truncation} cotas violadas"

def recognizer_instances(count_per_class: int, seed: int):
    """Instancias de las cuatro clases: con ciclos, exceso de caminos, sin camino s-t y miembros"""
    rng = make_rng(seed)
    classes = {"cyclic": [], "over_count": [], "no_path": [], "member": []}
    attempt = 0
    while min(len(v) for v in classes.values()) < count_per_class:
        n = int(rng.integers(3, 25))
        g = gen_random_dag(n, float(rng.choice([0.1, 0.2, 0.35])), seed + attempt)
        attempt += 1
        counts = exact_counts(g)
        max_count = max(max(row) for row in counts)
        if max_count > MAX_CERTIFIED:
            continue
        reachable = [(s, t) for s in range(n) for t in range(n) if counts[s][t] >= 1]
        unreachable = [(s, t) for s in range(n) for t in range(n) if counts[s][t] == 0]
        s, t = reachable[int(rng.integers(len(reachable)))]

        if len(classes["member"]) < count_per_class:
            classes["member"].append((g, s, t, max_count))
        if max_count >= 2 and len(classes["over_count"]) < count_per_class:
            classes["over_count"].append((g, s, t, max_count - 1))
        if unreachable and len(classes["no_path"]) < count_per_class:
            u, v = unreachable[int(rng.integers(len(unreachable)))]
            classes["no_path"].append((g, u, v, max_count))
        if g.m and len(classes["cyclic"]) < count_per_class:
            u, v = g.sorted_edges()[int(rng.integers(g.m))]
            cyclic = DirectedGraph(n=n, edges=g.edges | {(v, u)})
            classes["cyclic"].append((cyclic, s, t, max_count + 1))
    return classes

def criterion_recognizer():
    classes = recognizer_instances(100, SEED + 4)
    exact_wrong = total = 0
    for instances in classes.values():
        for g, s, t, k in instances:
            verdict = recognize_stcon_sf(g, s, t, k, NoiseModel.exact())
            exact_wrong += int(verdict.accepted != in_stcon_sf(g, s, t, k))
            total += 1

    rates = {}
    for name, instances in classes.items():
        wrong = runs = 0
        for g, s, t, k in instances[:NOISY_INSTANCES]:
            expected = in_stcon_sf(g, s, t, k)
            for _ in range(NOISY_REPETITIONS):
                noise = NoiseModel(mode="uniform", accuracy=1 / 3, seed=SEED + runs)
                wrong += int(recognize_stcon_sf(g, s, t, k, noise).accepted != expected)
                runs += 1
        rates[name] = wrong / runs
    ok = exact_wrong == 0 and all(rate <= 0.38 for rate in rates.values())
    summary = ", ".join(f"{name} {rate:.3f}" for name, rate in rates.items())
    return ok, f"{total} instancias exactas, {exact_wrong} desacuerdos; error con ruido: {summary}"

def criterion_spectral_bounds(corpus):
    failures = 0
    for index, (g, _, P) in enumerate(corpus):
        laplacian = counting_laplacian(g)
        dec = svd(laplacian)
        checks = diagnostics.spectral_bounds(g, P)
        checks.append(diagnostics.embedding_spectrum(laplacian))
        zeta = dec.sigma_min / 2 if dec.sigma_min > 0 else 1e-3
        checks.append(diagnostics.block_identity(laplacian, zeta, zeta / 2, seed=SEED + index, tol=1e-9 * g.n * P))
        failures += sum(1 for c in checks if not c.holds)
    return failures == 0, f"{len(corpus)} grafos, {failures} cotas violadas"

def criterion_overlaps(corpus):
    rng = make_rng(SEED + 6)
    failures = 0
    for g, counts, _ in corpus:
        s, t = sample_pairs(g.n, 1, rng)[0]
        P = max(counts.row_max(s).value, counts.column_max(t).value)
        checks = diagnostics.overlap_bounds(g, s, t, P) + [diagnostics.row_norm_identity(g, s)]
        failures += sum(1 for c in checks if not c.holds)
    return failures == 0, f"{len(corpus)} instancias, {failures} cotas violadas"

def criterion_random_walk():
    g = gen_chain_figure1(10)
    trials = 10 ** 6
    estimate = random_walk_hit_probability(g, 0, 19, g.n, trials, SEED)
    exact = 2.0 ** -9
    se = (exact * (1 - exact) / trials) ** 0.5
    ok = abs(estimate.probability - exact) <= 3 * se
    return ok, f"p≈{estimate.probability:.6f} frente a {exact:.6f} (3·SE = {3 * se:.6f})"

def layered_counts(lay: DirectedGraph) -> np.ndarray:
    """L⁻¹ de lay(G) redondeada; lay(G) es acíclico y su inversa es entera"""
    return np.rint(np.linalg.inv(counting_laplacian(lay))).astype(np.int64)

def criterion_layering(max_n: int = 4):
    failures = checked = 0
    for n in range(1, max_n + 1):
        pairs = list(product(range(n), repeat=2))
        for mask in range(2 ** len(pairs)):
            edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
            g = DirectedGraph.from_edges(n, edges)
            a = g.adjacency()
            walks = sum(np.linalg.matrix_power(a, length) for length in range(n))
            closed = sum(np.linalg.matrix_power(a, length) for length in range(1, n + 1))

            lay = layer_graph(g)
            lay_counts = layered_counts(lay)
            deep_counts = layered_counts(layer_graph(g, depth=n + 1))
            for i, j in pairs:
                if lay_counts[i, layered_index(j, n, n)] != walks[i, j]:
                    failures += 1
            for i in range(n):
                on_cycle = closed[i, i] > 0
                if (deep_counts[i, layered_index(i, n + 1, n)] >= 2) != on_cycle:
                    failures += 1
            failures += int(not lay.is_acyclic())
            checked += 1
    return failures == 0, f"{checked} grafos, {failures} fallos"

def run_acceptance():
    print("Preparando corpus de DAGs certificados...")
    corpus = certified_dags(200, 64, SEED)
    criteria = [
        ("1. Equivalencia con el oráculo", lambda: criterion_oracle_equivalence(corpus, NoiseModel.exact())),
        ("2. Ruido adversarial", lambda: criterion_oracle_equivalence(
            corpus, NoiseModel(mode="adversarial", accuracy=1 / 3 - 1e-6, seed=SEED))),
        ("3. Pocos caminos en los extremos", criterion_few_endpoints),
        ("4. Reconocedor", criterion_recognizer),
        ("5. Cotas espectrales", lambda: criterion_spectral_bounds(corpus)),
        ("6. Solapamientos y normas", lambda: criterion_overlaps(corpus[:100])),
        ("7. Caminata aleatoria", criterion_random_walk),
        ("8. Grafo por capas", criterion_layering),
    ]

    all_ok = True
    for name, check in criteria:
        started = time.perf_counter()
        ok, detail = check()
        all_ok &= ok
        print(f"{'✅' if ok else '❌'} {name}: {detail} ({time.perf_counter() - started:.1f} s)")
    return 0 if all_ok else 1

if __name__ == '__main__':
    sys.exit(run_acceptance())
