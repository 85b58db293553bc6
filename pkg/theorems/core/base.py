import logging
import threading
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from combinatorics.errors import ConsistencyError, PreconditionError
from combinatorics.partitions import Partition, l_core

from .models import Decomposition, TheoremMetadata

logger = logging.getLogger(__name__)


class TheoremBase(ABC):
    """Base class for decomposition theorems"""

    def __init__(self, metadata: TheoremMetadata):
        """
        Args:
            metadata: theorem metadata
        """
        self.metadata = metadata
        self._cache: Dict[Tuple[Tuple[str, int], ...], Decomposition] = {}
        self._lock = threading.Lock()
        self._stats = {
            "total_runs": 0,
            "cache_hits": 0,
            "rejected_runs": 0,
            "total_run_time": 0.0,
        }

    @classmethod
    @abstractmethod
    def get_metadata(cls) -> TheoremMetadata:
        pass

    @abstractmethod
    def validate(self, params: Dict[str, int]) -> List[str]:
        """
        Check the theorem's hypotheses.

        Args:
            params: resolved parameters (defaults and fixed values applied)

        Returns:
            List[str]: violated hypotheses, empty when the theorem applies
        """
        pass

    @abstractmethod
    def compute(self, params: Dict[str, int]) -> Decomposition:
        """
        Produce the decomposition; only called on validated parameters.

        Args:
            params: resolved parameters

        Returns:
            Decomposition: sorted summands with provenance
        """
        pass

    def resolve(self, **params: int) -> Dict[str, int]:
        """Apply defaults and fixed values; reject unknown or missing names"""
        known = set(self.metadata.parameters) | set(self.metadata.defaults) | set(self.metadata.fixed)
        violations = [f"unknown parameter '{name}'" for name in params if name not in known]
        violations += [
            f"missing parameter '{name}'" for name in self.metadata.parameters if params.get(name) is None
        ]
        for name, value in self.metadata.fixed.items():
            if params.get(name) is not None and params[name] != value:
                violations.append(f"{name} is fixed to {value} ({name}={params[name]})")
        if violations:
            raise PreconditionError(f"{self.metadata.name}: " + "; ".join(violations), violations)
        resolved = dict(self.metadata.defaults)
        resolved.update({k: int(v) for k, v in params.items() if v is not None})
        resolved.update(self.metadata.fixed)
        return resolved

    def decompose(self, **params: int) -> Decomposition:
        """
        Validate, compute and check a decomposition.

        Safe to call from the grid executor's worker threads.

        Raises:
            PreconditionError: a hypothesis of the theorem fails
            ConsistencyError: the result breaks degree or core conservation
        """
        resolved = self.resolve(**params)
        cache_key = tuple(sorted(resolved.items()))
        with self._lock:
            if self.metadata.cache_results and cache_key in self._cache:
                self._stats["cache_hits"] += 1
                return self._cache[cache_key]

        violations = self.validate(resolved)
        if violations:
            with self._lock:
                self._stats["rejected_runs"] += 1
            raise PreconditionError(f"{self.metadata.name}: " + "; ".join(violations), violations)

        start_time = time.time()
        result = self.compute(resolved)
        self.check_result(result)
        elapsed = time.time() - start_time
        logger.info(
            f"{self.metadata.name} {resolved}: {len(result.summands)} summands ({elapsed:.3f}s)"
        )

        with self._lock:
            self._stats["total_runs"] += 1
            self._stats["total_run_time"] += elapsed
            if self.metadata.cache_results:
                self._cache[cache_key] = result
        return result

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        """l-core shared by every summand label, when the theorem fixes one"""
        return None

    def check_result(self, result: Decomposition) -> None:
        """Degree conservation, and conservation of the expected core"""
        labels = result.labels()
        reference = result.specht if result.specht is not None else result.permutation
        if reference is not None:
            degree = sum(reference)
            for label in labels:
                if label.degree != degree:
                    raise ConsistencyError(
                        f"{self.metadata.name}: {label} has degree {label.degree}, expected {degree}"
                    )
        expected = self.expected_core(result.parameters)
        if expected is not None:
            l = result.parameters.get("l", 2)
            for label in labels:
                core = l_core(label, l)
                if core != expected:
                    raise ConsistencyError(
                        f"{self.metadata.name}: {label} has {l}-core {core}, expected {expected}"
                    )

    def get_statistics(self) -> Dict[str, Any]:
        with self._lock:
            stats = self._stats.copy()
            stats["cache_size"] = len(self._cache)
        if stats["total_runs"] > 0:
            stats["average_run_time"] = stats["total_run_time"] / stats["total_runs"]
        else:
            stats["average_run_time"] = 0.0
        return stats
