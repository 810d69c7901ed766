"""Batch processing utilities for independent CPU-bound tasks."""

import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, TypeVar

import structlog

logger = structlog.get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BatchProcessor:
    """Utility for fanning independent items out to a bounded worker pool."""

    @staticmethod
    async def process_parallel(
        items: List[T],
        processor: Callable[[T], R],
        max_concurrent: int = 4,
        raise_errors: bool = False,
    ) -> List[Optional[R]]:
        """Process items in parallel with a concurrency limit.

        The processor is a synchronous callable; it runs in a thread pool so the
        event loop stays responsive. Results come back in input order. Items whose
        processor raised are logged; with ``raise_errors`` the first failure (in
        input order) is re-raised once every item has finished, otherwise failed
        items are reported as ``None``.

        Args:
            items: Items to process
            processor: Function that processes a single item
            max_concurrent: Maximum concurrent operations
            raise_errors: Re-raise the first worker exception instead of returning None

        Returns:
            One result per item, in input order
        """
        loop = asyncio.get_running_loop()
        semaphore = asyncio.Semaphore(max_concurrent)

        with ThreadPoolExecutor(max_workers=max_concurrent) as executor:

            async def process_with_semaphore(item: T) -> R:
                async with semaphore:
                    return await loop.run_in_executor(executor, processor, item)

            tasks = [process_with_semaphore(item) for item in items]
            results = await asyncio.gather(*tasks, return_exceptions=True)

        errors = [r for r in results if isinstance(r, Exception)]
        if errors:
            logger.warning(
                "parallel_processing_errors", count=len(errors), first_error=repr(errors[0])
            )
            if raise_errors:
                raise errors[0]

        return [None if isinstance(r, Exception) else r for r in results]
