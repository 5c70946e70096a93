# Copyright SDSLIB CONTRIBUTORS 2024

"""
Existence decisions for two-block SDS.

DIRECT searches +-1 sequences of length v: the A side over charmed bracelets with
v-2r as row sum, the B side over bracelets with v-2s. COMPRESS(m) splits into content
cases of the m-compressed sequences, searches each case the same way at length v/m,
matches with the compressed PAF-constant and lifts matched pairs back to length v.

Enumeration, the PSD-test and the canonicality check are fused: necklaces are
generated in batches, PSD-filtered (the test is invariant under every equivalence
used) and only survivors are checked for canonicality. Class counts of the
candidate spaces come from count_classes.
"""

import itertools
import logging
import time
from math import comb, isqrt, prod
from typing import Dict, List, Optional, Tuple, Union

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
import pydantic
from joblib import Parallel, delayed

import sdslib.config as cfg
from sdslib.compress import CompressionSpec, Content, case_split, compress, sds_compressed_constants
from sdslib.enums import EquivMode, ExistenceStatus, Side, StrategyKind
from sdslib.enumeration import PrefixState, necklace_prefixes, necklace_words, necklaces_from_prefix, word_batches
from sdslib.exception import InputError, NotDivisible, TooLarge, Unsupported
from sdslib.params import SdsParams, inputconverter_params, sds_constants, verify_sds
from sdslib.search.lifting import lift
from sdslib.search.matching import CandidateSet, PafKey, match_pairs
from sdslib.search.psd_filter import psd_mask
from sdslib.search.report import CaseReportRow, ExistenceResult, SearchReport, SideCounts
from sdslib.sequence import Sequence, Subset, associated_sequence, block_of, subset_norm
from sdslib.symmetry import canonical_mask, count_classes

logger = logging.getLogger(__name__)

ORACLE_MAX_PAIRS = 10**8

Witness = List[Subset]


class SearchStrategy(pydantic.BaseModel):
    """
    DIRECT, or COMPRESS with a compression factor m.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    kind: StrategyKind
    m: int = 1

    @classmethod
    def from_str(cls, s: str) -> Self:
        """
        Parse "direct", "compress2", "compress3" or "compress(m)".
        """
        text = s.strip().lower().replace("(", "").replace(")", "")
        if text == "direct":
            return cls(kind=StrategyKind.DIRECT)
        if text.startswith("compress"):
            factor = text[len("compress") :] or "2"
            try:
                m = int(factor)
            except ValueError as e:
                raise InputError(f"Unknown compression factor in strategy '{s}'") from e
            if m < 2:
                raise InputError(f"Compression factor must be at least 2, got {m}")
            return cls(kind=StrategyKind.COMPRESS, m=m)
        raise InputError(f"Unknown strategy '{s}', expected direct, compress2 or compress3")

    def get_name(self) -> str:
        """
        Strategy name as accepted by from_str.
        """
        return "direct" if self.kind == StrategyKind.DIRECT else f"compress{self.m}"


class SearchSettings(pydantic.BaseModel):
    """
    Tunables of a search, defaulting to the search section of the configuration.
    """

    tol: float = pydantic.Field(default=1e-6, ge=0)
    batch_size: int = pydantic.Field(default=65536, ge=1)
    jobs: int = 1
    prefix_depth: int = pydantic.Field(default=3, ge=0)
    max_classes: int = pydantic.Field(default=0, ge=0)

    @classmethod
    def from_config(cls, **overrides) -> Self:
        """
        Settings from the global configuration, with explicit non-None overrides applied.
        """
        values = {
            "tol": cfg.get("search.psd_tolerance", 1e-6),
            "batch_size": cfg.get("search.batch_size", 65536),
            "jobs": cfg.get("search.jobs", 1),
            "prefix_depth": cfg.get("search.prefix_depth", 3),
            "max_classes": cfg.get("search.max_classes", 0),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def diophantine_precheck(v: int) -> bool:
    """
    True iff x^2 + y^2 = 2v has a solution in nonnegative integers, a necessary
    condition for binary periodic complementary pairs of length v.
    """
    target = 2 * v
    for x in range(isqrt(target) + 1):
        y = isqrt(target - x * x)
        if y * y == target - x * x:
            return True
    return False


def _scan(
    content: Content,
    mode: EquivMode,
    beta: int,
    tol: float,
    batch_size: int,
    state: Optional[PrefixState] = None,
) -> np.ndarray:
    """
    Canonicals under mode that pass the PSD-test, below an optional prefix state.
    """
    words = necklace_words(content) if state is None else necklaces_from_prefix(content, state)
    survivors = []
    seen = 0
    for batch in word_batches(content, words, batch_size):
        seen += len(batch)
        batch = batch[psd_mask(batch, beta, tol)]
        if len(batch) and mode != EquivMode.NECKLACE:
            batch = batch[canonical_mask(batch, mode)]
        if len(batch):
            survivors.append(batch)
        logger.debug("%s: %d necklaces scanned, %d kept", content, seen, sum(len(b) for b in survivors))
    if not survivors:
        return np.zeros((0, content.length), dtype=np.int64)
    return np.concatenate(survivors)


def filtered_candidates(
    content: Content, mode: EquivMode, beta: int, settings: Optional[SearchSettings] = None
) -> List[Sequence]:
    """
    All canonicals of a content under a mode that pass the PSD-test with bound beta,
    in lexicographic order. With settings.jobs > 1 the necklace walk is split by
    prefixes and the parts are scanned in parallel.
    """
    if settings is None:
        settings = SearchSettings.from_config()
    if settings.jobs > 1:
        states = necklace_prefixes(content, settings.prefix_depth)
        logger.debug("%s: scanning %d prefix states on %d jobs", content, len(states), settings.jobs)
        parts = Parallel(n_jobs=settings.jobs)(
            delayed(_scan)(content, mode, beta, settings.tol, settings.batch_size, state) for state in states
        )
    else:
        parts = [_scan(content, mode, beta, settings.tol, settings.batch_size)]
    rows = np.concatenate(parts) if parts else np.zeros((0, content.length), dtype=np.int64)
    return [Sequence(v=content.length, values=tuple(row)) for row in rows.tolist()]


class _Side(pydantic.BaseModel):
    candidates: CandidateSet
    deduped: CandidateSet
    classes: Dict[PafKey, List[Sequence]]
    counts: SideCounts


def _side(
    params: SdsParams,
    content: Content,
    side: Side,
    beta: int,
    settings: SearchSettings,
    spec: Optional[CompressionSpec],
    seeded: Optional[List[Sequence]],
    skip: bool = False,
) -> Optional[_Side]:
    mode = EquivMode.CHARMED if side == Side.A else EquivMode.BRACELET
    if skip:
        return None
    if seeded is not None:
        enumerated = len(seeded)
        sequences = []
        if seeded:
            keep = psd_mask(np.asarray([a.values for a in seeded]), beta, settings.tol)
            sequences = [a for a, ok in zip(seeded, keep) if ok]
    else:
        enumerated = count_classes(content, mode)
        if settings.max_classes and enumerated > settings.max_classes:
            logger.warning(
                "%s side %s: %d classes exceed max_classes=%d, not enumerated",
                params.get_name(),
                side.name,
                enumerated,
                settings.max_classes,
            )
            return None
        sequences = filtered_candidates(content, mode, beta, settings)
    candidates = CandidateSet.of(params, content, side, sequences, spec)
    deduped, classes = candidates.deduped()
    counts = SideCounts(content=str(content), enumerated=enumerated, psd_passed=len(candidates), deduped=len(deduped))
    return _Side(candidates=candidates, deduped=deduped, classes=classes, counts=counts)


def _lift_direct(pair: Tuple[Sequence, Sequence], params: SdsParams) -> List[Witness]:
    blocks = [block_of(pair[0]), block_of(pair[1])]
    return [blocks] if verify_sds(params, blocks) else []


def _witness_key(blocks: Witness) -> Tuple[Tuple[int, ...], ...]:
    return tuple(b.elements for b in blocks)


def _seed_sequences(
    seeds: List[Witness], params: SdsParams, spec: Optional[CompressionSpec]
) -> Tuple[List[Sequence], List[Sequence]]:
    a_side: Dict[Tuple[int, ...], Sequence] = {}
    b_side: Dict[Tuple[int, ...], Sequence] = {}
    for blocks in seeds:
        if len(blocks) != 2 or blocks[0].v != params.v:
            raise InputError(f"Seed {blocks} is not a pair of blocks in Z_{params.v}")
        a, b = (associated_sequence(x) for x in blocks)
        if spec is not None:
            a, b = compress(a, spec.d), compress(b, spec.d)
        a_side.setdefault(a.values, a)
        b_side.setdefault(b.values, b)
    return list(a_side.values()), list(b_side.values())


def decide_two_block(
    params: Union[SdsParams, str],
    strategy: Union[SearchStrategy, str] = "compress2",
    seeds: Optional[List[Witness]] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
    batch_size: Optional[int] = None,
    prefix_depth: Optional[int] = None,
    max_classes: Optional[int] = None,
) -> ExistenceResult:
    """
    Decide whether an SDS with two blocks and the given parameters exists.

    NOT_EXISTS is returned only when every content case was searched exhaustively
    and no witness was found. A seeded run only searches the sequences of the given
    witnesses; it returns EXISTS if lifting recovers witnesses and UNKNOWN otherwise.
    A side larger than max_classes is not enumerated, which also yields UNKNOWN.
    """
    params = inputconverter_params(params)
    if isinstance(strategy, str):
        strategy = SearchStrategy.from_str(strategy)
    if params.t != 2:
        raise Unsupported(f"Existence search is implemented for two blocks, got t={params.t}")
    settings = SearchSettings.from_config(
        tol=tol, jobs=jobs, batch_size=batch_size, prefix_depth=prefix_depth, max_classes=max_classes
    )
    start = time.perf_counter()
    consts = sds_constants(params)
    r, s = params.ks

    spec: Optional[CompressionSpec] = None
    if strategy.kind == StrategyKind.DIRECT:
        m = 1
        cases = [(Content.of(1, {-1: r, 1: params.v - r}), Content.of(1, {-1: s, 1: params.v - s}))]
        alpha_d = consts.alpha
    else:
        m = strategy.m
        if params.v % m != 0:
            raise NotDivisible(f"Compression factor {m} does not divide v={params.v}")
        spec = CompressionSpec.from_factor(params.v, m)
        cases = case_split(params, m, spec.d)
        alpha_d = sds_compressed_constants(params, m)[1]

    report = SearchReport(
        params=params.get_name(),
        strategy=strategy.get_name(),
        beta=consts.beta,
        alpha_d=alpha_d,
        seeded=seeds is not None,
    )

    if consts.alpha == 0 and not diophantine_precheck(params.v):
        report.notes.append(f"x^2 + y^2 = {2 * params.v} has no solution")
        logger.info("%s: Diophantine precheck fails", params.get_name())
        report.total_seconds = time.perf_counter() - start
        return ExistenceResult(status=ExistenceStatus.NOT_EXISTS, report=report)

    seed_a = seed_b = None
    if seeds is not None:
        seed_a, seed_b = _seed_sequences(seeds, params, spec)

    found: Dict[Tuple[Tuple[int, ...], ...], Witness] = {}
    complete = True
    for case_no, (content_a, content_b) in enumerate(cases, start=1):
        case_start = time.perf_counter()
        a_seeded = [a for a in seed_a if Content.of_sequence(a, m) == content_a] if seed_a is not None else None
        b_seeded = [b for b in seed_b if Content.of_sequence(b, m) == content_b] if seed_b is not None else None
        if seeds is not None and not a_seeded and not b_seeded:
            continue

        a_side = _side(params, content_a, Side.A, consts.beta, settings, spec, a_seeded)
        # an empty A side settles the direct search
        stop_early = strategy.kind == StrategyKind.DIRECT and a_side is not None and len(a_side.candidates) == 0
        b_side = _side(params, content_b, Side.B, consts.beta, settings, spec, b_seeded, skip=stop_early)
        if a_side is None or (b_side is None and not stop_early):
            complete = False

        pairs = []
        lifted = 0
        if a_side is not None and b_side is not None:
            pairs = match_pairs(a_side.deduped, b_side.deduped, alpha_d)
            a_pafs = dict(zip((x.values for x in a_side.deduped.sequences), a_side.deduped.pafs))
            b_pafs = dict(zip((x.values for x in b_side.deduped.sequences), b_side.deduped.pafs))
            for a_rep, b_rep in pairs:
                a_class = a_side.classes[a_pafs[a_rep.values]]
                b_class = b_side.classes[b_pafs[b_rep.values]]
                for a, b in itertools.product(a_class, b_class):
                    witnesses = (
                        _lift_direct((a, b), params)
                        if spec is None
                        else lift((a, b), spec, params, settings.batch_size)
                    )
                    lifted += len(witnesses)
                    for blocks in witnesses:
                        found.setdefault(_witness_key(blocks), blocks)

        row = CaseReportRow(
            case=case_no,
            a_side=a_side.counts if a_side else SideCounts(content=str(content_a), skipped=True),
            b_side=b_side.counts if b_side else SideCounts(content=str(content_b), skipped=True),
            matched_pairs=len(pairs),
            lifted_witnesses=lifted,
            seconds=time.perf_counter() - case_start,
        )
        report.rows.append(row)
        logger.info(
            "%s case %d A[%s] %d -> %d -> %d, B[%s] %d -> %d -> %d, pairs %d, lifted %d",
            params.get_name(),
            case_no,
            row.a_side.content,
            row.a_side.enumerated,
            row.a_side.psd_passed,
            row.a_side.deduped,
            row.b_side.content,
            row.b_side.enumerated,
            row.b_side.psd_passed,
            row.b_side.deduped,
            row.matched_pairs,
            row.lifted_witnesses,
        )
        if stop_early:
            report.notes.append("no A-sequences pass the PSD-test")
            break

    witnesses = [found[key] for key in sorted(found)]
    if witnesses:
        status = ExistenceStatus.EXISTS
    elif seeds is not None or not complete:
        status = ExistenceStatus.UNKNOWN
    else:
        status = ExistenceStatus.NOT_EXISTS
    report.total_seconds = time.perf_counter() - start
    logger.info("%s %s: %s with %d witnesses", params.get_name(), strategy.get_name(), status.name, len(witnesses))
    return ExistenceResult(status=status, witnesses=witnesses, report=report)


def _norm_key(X: Subset) -> Tuple[int, ...]:
    return subset_norm(X).values[1:]


def direct_search_oracle(params: SdsParams, max_pairs: int = ORACLE_MAX_PAIRS) -> List[Witness]:
    """
    Every family of base blocks with the given sizes that verifies as an SDS, by
    exhaustive enumeration of all subsets. The last block is looked up through a
    hash of its norm; every hit is confirmed with verify_sds.
    """
    v, ks, lam = params.v, params.ks, params.lam
    if lam < 0 or lam * (v - 1) != sum(k * (k - 1) for k in ks):
        return []
    total = prod(comb(v, k) for k in ks)
    if total > max_pairs:
        raise TooLarge(f"{total} candidate block families for {params.get_name()} exceed the limit {max_pairs}")

    def subsets(k: int) -> List[Subset]:
        return [Subset(v=v, elements=c) for c in itertools.combinations(range(v), k)]

    last: Dict[Tuple[int, ...], List[Subset]] = {}
    for Y in subsets(ks[-1]):
        last.setdefault(_norm_key(Y), []).append(Y)

    found = []
    heads = [[(X, _norm_key(X)) for X in subsets(k)] for k in ks[:-1]]
    for combo in itertools.product(*heads):
        wanted = [lam] * (v - 1)
        for _, key in combo:
            wanted = [w - x for w, x in zip(wanted, key)]
        for Y in last.get(tuple(wanted), []):
            blocks = [X for X, _ in combo] + [Y]
            if verify_sds(params, blocks):
                found.append(blocks)
    logger.info("%s: oracle found %d block families", params.get_name(), len(found))
    return found
