# Third-party imports
from sympy import isprime, multiplicity, primefactors

# Local Imports
from src.errors import GroupDomainError, InternalInconsistencyError, UnsupportedGroupError, CatalogIntegrityError
from src.characters.character_table import character_table
from src.characters.class_functions import restrict, kernel, inflate, deflate
from src.characters.clifford import (
    constituents, extensions, gallagher_family, invariant_constituents,
    invariant_irreducibles, lies_over,
)
from src.core.canonical_series import NavarroTriple, canonical_series
from src.core.fprime_characters import fprime_ascending, fprime_descending_test, unique_invariant_below
from src.core.pair_series import is_head_character, series_independence_check, diamond_check
from src.core.reports import Report, subgroup_json, character_json
from src.formations.descriptors import FormationDescriptor, NILPOTENT, SUPERSOLVABLE
from src.formations.projectors import projector, residual, navarro_condition
from src.groups.group_maps import quotient
from src.groups.perm_group import PermGroup, trivial_group
from src.groups.subgroups import (
    derived_subgroup, intersection, is_nilpotent, is_solvable, join,
    normal_subgroups, normalizer, sylow,
)
from src.logger import get_logger




logger = get_logger("core.theorems")


# --- Auxiliar Functions ---

def _label(G: PermGroup) -> str:
    return G.name or f"order {G.order}"

def _hypothesis_holds(G: PermGroup, F: FormationDescriptor) -> bool:

    """Odd order or F the nilpotent formation."""

    return G.order % 2 == 1 or F.kind == "nilpotent"

def _kernel_intersection(G: PermGroup, characters) -> PermGroup:
    M = G
    for chi in characters:
        M = intersection(M, kernel(chi))
    return M

def _largest_normal(G: PermGroup, condition) -> tuple:

    """Join of all normal subgroups satisfying condition, with the candidate list; the join must satisfy it too."""

    candidates = [N for N in normal_subgroups(G) if condition(N)]
    M = trivial_group(G.degree)
    for N in candidates:
        M = join(M, N)
    if not condition(M):
        raise InternalInconsistencyError("the join of the admissible normal subgroups is not admissible")
    return M, candidates


# --- Extension transfer ---

def extension_transfer_check(G: PermGroup, K: PermGroup, L: PermGroup, F: FormationDescriptor,
                             theta, phi=None, H: PermGroup = None) -> Report:

    """
    Cross-extension check over a Navarro triple (G, K, L).

    Part (a): each extension eta of phi to LH lies under some extension of
    theta to G. Part (b): each extension of theta to G lies over some
    extension of phi to LH. Both must hold when G has odd order or F is the
    nilpotent formation; otherwise the report notes the hypothesis is violated.

    Args:
        G (PermGroup): The group.
        K (PermGroup): Normal subgroup with G = KH.
        L (PermGroup): Normal subgroup of G inside K.
        F (FormationDescriptor): The formation.
        theta (ClassFunction): H-invariant irreducible character of K.
        phi (ClassFunction): Optional. Defaults to the unique invariant character below theta.
        H (PermGroup): Optional. The projector; computed when absent.

    Returns:
        Report: One instance per extension of phi and per extension of theta.
    """

    H = H or projector(G, F)
    if not navarro_condition(G, K, L, F, H):
        raise GroupDomainError("(G, K, L) is not a Navarro triple")

    if phi is None:
        phi = unique_invariant_below(theta, NavarroTriple(G, K, L, H))
    LH = join(L, H)
    theta_ext = extensions(theta, G)
    phi_ext = extensions(phi, LH)

    report = Report("extension-transfer", _label(G), F.name)
    report.notes.append("hypothesis holds" if _hypothesis_holds(G, F) else "hypothesis violated")
    base = {"K": subgroup_json(K), "L": subgroup_json(L), "theta": character_json(theta), "phi": character_json(phi)}

    for eta in phi_ext:
        over = [chi for chi in theta_ext if lies_over(chi, eta)]
        report.add({**base, "part": "a", "eta": character_json(eta)}, bool(over),
                   extensions_over=[character_json(chi) for chi in over])

    for chi in theta_ext:
        under = [eta for eta in phi_ext if lies_over(chi, eta)]
        report.add({**base, "part": "b", "chi": character_json(chi)}, bool(under),
                   extensions_under=[character_json(eta) for eta in under])

    return report

def extension_transfer_sweep(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> Report:

    """Runs the extension check on every H-invariant theta at every level of the canonical series."""

    cs = canonical_series(G, F, H)
    report = Report("extension-transfer", _label(G), F.name)
    report.notes.append("hypothesis holds" if _hypothesis_holds(G, F) else "hypothesis violated")

    for i in range(cs.m):
        triple = cs.triple(i)
        for theta in invariant_irreducibles(triple.K, cs.projector):
            sub = extension_transfer_check(triple.group, triple.K, triple.L, F, theta, H=cs.projector)
            for instance in sub.instances:
                instance.inputs["level"] = i
                report.instances.append(instance)

    return report


# --- Theorem A ---

def theorem_a_report(G: PermGroup, F: FormationDescriptor, N: PermGroup = None, H: PermGroup = None) -> Report:

    """
    Normal-subgroup behaviour of the F'-characters.

    For every chi in Irr_F'(G) and the normal subgroup N (all normal subgroups
    when N is absent): (a) chi restricted to N has exactly one H-invariant
    constituent theta; (b) theta(1) divides chi(1) and the ratio divides
    |G : NH|; (c) under the odd-order or nilpotent hypothesis, some
    F'-character gamma of NH under chi restricts to theta and every
    F'-constituent of chi on NH is a twist of gamma by a linear character of
    NH/N. Also checks chi(1) | |G:H| for N = 1 and irreducibility on N when
    G/N is nilpotent.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): A formation containing the nilpotent groups.
        N (PermGroup): Optional. A normal subgroup of G.
        H (PermGroup): Optional. The projector; computed when absent.

    Returns:
        Report: One instance per (N, chi).
    """

    H = H or projector(G, F)
    irr = fprime_ascending(G, F, H)
    flag = _hypothesis_holds(G, F)
    normals = [N] if N is not None else normal_subgroups(G)

    report = Report("thm-a", _label(G), F.name)
    if not flag:
        report.notes.append("part (c) skipped: hypothesis violated")

    for N in normals:
        if not N.is_normal_in(G):
            raise GroupDomainError("N is not normal in G")

        NH = join(N, H)
        index = G.order // NH.order
        nilpotent_top = is_nilpotent(quotient(G, N)[0])
        irr_NH = fprime_ascending(NH, F, H) if flag else []

        for chi in irr:
            thetas = invariant_constituents(restrict(chi, N), H)
            witnesses = {"invariant_constituents": [character_json(t) for t in thetas]}
            ok_a = len(thetas) == 1
            ok_b = ok_c = True

            if ok_a:
                theta = thetas[0]
                ok_b = chi.degree % theta.degree == 0 and index % (chi.degree // theta.degree) == 0
                witnesses["ratio"] = chi.degree // theta.degree if chi.degree % theta.degree == 0 else None
                witnesses["index"] = index

                if flag:
                    gammas = [g for g in irr_NH if restrict(g, N) == theta and lies_over(chi, g)]
                    ok_c = bool(gammas)
                    if ok_c:
                        family = gallagher_family(gammas[0], N)
                        on_NH = [psi for psi, _ in constituents(restrict(chi, NH)) if psi in irr_NH]
                        ok_c = all(psi in family for psi in on_NH)
                        witnesses["gamma"] = character_json(gammas[0])
                    witnesses["c"] = ok_c
                else:
                    witnesses["c"] = "hypothesis violated"

            ok_special = True
            if N.is_trivial():
                ok_special = (G.order // H.order) % chi.degree == 0
            if nilpotent_top:
                ok_special = ok_special and restrict(chi, N).is_irreducible()
            witnesses["specializations"] = ok_special

            report.add(
                {"normal": subgroup_json(N), "character": character_json(chi)},
                ok_a and ok_b and ok_c and ok_special, **witnesses,
            )

    return report


# --- Kernel theorems ---

def kernel_lemma_check(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> list:

    """Normal subgroups N with N meet H inside H' that are not in every F'-kernel; empty on success."""

    H = H or projector(G, F)
    Hd = derived_subgroup(H)
    kernels = [kernel(chi) for chi in fprime_ascending(G, F, H)]
    return [
        N for N in normal_subgroups(G)
        if intersection(N, H).is_subgroup_of(Hd) and not all(N.is_subgroup_of(k) for k in kernels)
    ]

def theorem_b_report(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> Report:

    """
    Kernel of the F'-characters.

    M1 is the intersection of the kernels of Irr_F'(G) and M2 the largest
    normal subgroup meeting H inside H'; they must be equal. Also checks the
    kernel lemma on every admissible N and that inflation and deflation along
    G -> G/M1 match the F'-characters on both sides.

    Args:
        G (PermGroup): A solvable group.
        F (FormationDescriptor): A formation containing the nilpotent groups.
        H (PermGroup): Optional. The projector; computed when absent.

    Returns:
        Report: Instances for the equality, the kernel lemma and the inflation checks.
    """

    H = H or projector(G, F)
    irr = fprime_ascending(G, F, H)
    Hd = derived_subgroup(H)

    M1 = _kernel_intersection(G, irr)
    M2, _ = _largest_normal(G, lambda N: intersection(N, H).is_subgroup_of(Hd))

    report = Report("thm-b", _label(G), F.name)
    report.add({"check": "kernels"}, M1 == M2, M1=subgroup_json(M1), M2=subgroup_json(M2), order=M1.order)

    offenders = kernel_lemma_check(G, F, H)
    report.add({"check": "kernel-lemma"}, not offenders, offenders=[subgroup_json(N) for N in offenders])

    Q, pi = quotient(G, M1)
    irr_Q = fprime_ascending(Q, F)
    inflated = [inflate(psi, pi) for psi in irr_Q]
    deflated = [deflate(chi, pi) for chi in irr]
    report.add({"check": "inflation"}, all(x in irr for x in inflated), count=len(inflated))
    report.add({"check": "deflation"}, all(x in irr_Q for x in deflated), count=len(deflated))
    report.add({"check": "quotient-count"}, len(irr) == len(irr_Q), group=len(irr), quotient=len(irr_Q))

    logger.info(f"{'✅' if report.passed else '❌'} Kernel theorem for {_label(G)}: M of order {M1.order}")
    return report

def theorem_c_report(G: PermGroup, p: int) -> Report:

    """
    Kernel of the p'-degree characters.

    The intersection of the kernels of the irreducibles of degree prime to p
    must equal the largest normal K with N_K(P) inside P' for a Sylow
    p-subgroup P.

    Args:
        G (PermGroup): A solvable group.
        p (int): A prime.

    Returns:
        Report: One instance with both subgroups.
    """

    if not isprime(p):
        raise GroupDomainError(f"{p} is not prime")
    if not is_solvable(G):
        raise UnsupportedGroupError("the p'-kernel check is only run on solvable groups")

    P = sylow(G, p)
    Pd = derived_subgroup(P)
    N_P = normalizer(G, P)

    pprime = [chi for chi in character_table(G) if chi.degree % p]
    M1 = _kernel_intersection(G, pprime)
    M2, _ = _largest_normal(G, lambda K: intersection(N_P, K).is_subgroup_of(Pd))

    report = Report("thm-c", _label(G), f"p={p}")
    report.add({"prime": p}, M1 == M2, M1=subgroup_json(M1), M2=subgroup_json(M2), order=M1.order,
               characters=[character_json(chi) for chi in pprime])
    return report


# --- Counting and equivalence ---

def counting_report(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> Report:
    H = H or projector(G, F)
    count = len(fprime_ascending(G, F, H))
    target = H.order // derived_subgroup(H).order
    report = Report("counting", _label(G), F.name)
    report.add({"projector": subgroup_json(H)}, count == target, characters=count, abelianization=target)
    return report

def counting_check(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> bool:

    """|Irr_F'(G)| = |H : H'|."""

    return counting_report(G, F, H).passed

def head_character_equivalence_report(G: PermGroup, F: FormationDescriptor, H: PermGroup = None) -> Report:

    """
    Ascending set, descending test and strong pair series must agree on every irreducible.

    Head characters also get the series independence and diamond checks.
    """

    cs = canonical_series(G, F, H)
    H = cs.projector
    ascending = set(fprime_ascending(G, F, H))

    report = Report("thm54", _label(G), F.name)
    for chi in character_table(G):
        asc = chi in ascending
        desc = fprime_descending_test(chi, G, F, H, series=cs).passed
        head = is_head_character(chi, G, F, H)
        witnesses = {"ascending": asc, "descending": desc, "head": head}
        ok = asc == desc == head

        if head:
            independence = series_independence_check(chi, G, F, H)
            diamonds = diamond_check(chi, G, F, H)
            witnesses["independence"] = independence
            witnesses["diamonds"] = diamonds
            ok = ok and independence["agree"] and diamonds["agree"] and diamonds["strong_transfers"]

        report.add({"character": character_json(chi)}, ok, **witnesses)

    return report

def mckay_check(G: PermGroup) -> Report:

    """
    When the Carter subgroup is a Sylow p-subgroup, the nilpotent head characters are the p'-degree ones.

    Returns:
        Report: No instances and a note when the Carter subgroup is not a Sylow subgroup.
    """

    H = projector(G, NILPOTENT)
    report = Report("mckay", _label(G), NILPOTENT.name)
    primes = primefactors(H.order)

    if len(primes) != 1 or H.order != primes[0] ** multiplicity(primes[0], G.order):
        report.notes.append("not applicable: the Carter subgroup is not a Sylow subgroup")
        return report

    p = primes[0]
    heads = fprime_ascending(G, NILPOTENT, H)
    pprime = [chi for chi in character_table(G) if chi.degree % p]
    report.add({"prime": p}, set(heads) == set(pprime),
               heads=[character_json(chi) for chi in heads], pprime=[character_json(chi) for chi in pprime])
    return report


# --- The order 48 regression ---

def counterexample_report(G: PermGroup) -> Report:

    """
    Confirms that the cross-extension property fails for the binary octahedral group.

    With F supersolvable, K is the residual (quaternion of order 8) and L its
    derived subgroup (order 2). The nonlinear theta of K extends to G and the
    invariant phi below it extends to LH, yet no extension of theta lies over
    an extension of phi. The instance passes when that failure is observed.

    Args:
        G (PermGroup): The order 48 group with a unique involution.

    Returns:
        Report: One instance, passing when the failure is confirmed.
    """

    F = SUPERSOLVABLE
    H = projector(G, F)
    K = residual(G, F)
    L = derived_subgroup(K)
    if K.order != 8 or L.order != 2:
        raise CatalogIntegrityError(f"expected residual of order 8 over a subgroup of order 2, got {K.order} and {L.order}")

    thetas = [t for t in character_table(K) if t.degree == 2]
    if len(thetas) != 1:
        raise CatalogIntegrityError("the residual does not have a unique nonlinear character")
    theta = thetas[0]
    phi = unique_invariant_below(theta, NavarroTriple(G, K, L, H))

    theta_ext = extensions(theta, G)
    phi_ext = extensions(phi, join(L, H))
    transfer = extension_transfer_check(G, K, L, F, theta, phi, H)
    confirmed = bool(theta_ext) and bool(phi_ext) and not transfer.passed

    report = Report("counterexample-2S4", _label(G), F.name)
    report.add(
        {"K": subgroup_json(K), "L": subgroup_json(L), "theta": character_json(theta), "phi": character_json(phi)},
        confirmed,
        theta_extensions=[character_json(chi) for chi in theta_ext],
        phi_extensions=[character_json(eta) for eta in phi_ext],
        transfer_failures=sum(1 for i in transfer.instances if not i.passed),
    )
    logger.info(f"{'✅' if confirmed else '❌'} Cross-extension failure {'confirmed' if confirmed else 'not observed'} on {_label(G)}")
    return report
