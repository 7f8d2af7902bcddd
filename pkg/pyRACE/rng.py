# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Pinned pseudo random number generation

Every seeded behavior of pyRACE draws its randomness from this module so that results don't depend on the platform,
the numpy version or the thread schedule:

- ``SplitMix64`` expands and derives seeds
- ``RngStream`` is a xoshiro256** generator producing 64-bit words, 53-bit uniform reals and Box-Muller gaussians
- ``derive_stream`` gives each (round, slot) pair its own stream computed from the master seed alone
"""
import math
from typing import List, Tuple

MASK64 = 2 ** 64 - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# round index reserved for the streams handed to the learners
TRAINING_ROUND = 2 ** 32 - 1


def splitmix64(state: int) -> Tuple[int, int]:
    """
    Advance a SplitMix64 state by one step

    :param state: 64-bit state
    :return: (new state, output word)
    """
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


class SplitMix64:
    """
    SplitMix64 generator, only used to seed and derive xoshiro256** states

    :param seed: 64-bit seed
    """

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next(self) -> int:
        """Generate next 64-bit word"""
        self._state, result = splitmix64(self._state)
        return result


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class RngStream:
    """
    xoshiro256** generator owned by exactly one logical task

    The 256-bit state is filled with four successive SplitMix64 outputs of the seed.

    :param seed: 64-bit seed
    """

    def __init__(self, seed: int):
        expander = SplitMix64(seed)
        self._s = [expander.next() for _ in range(4)]

    @classmethod
    def from_state(cls, state: Tuple[int, int, int, int]) -> 'RngStream':
        """Stream starting from a raw 256-bit state, which must not be all zero"""
        if len(state) != 4 or not any(state):
            raise ValueError('xoshiro256** needs four words, not all zero')
        stream = cls.__new__(cls)
        stream._s = [word & MASK64 for word in state]
        return stream

    @property
    def state(self) -> Tuple[int, int, int, int]:
        """current generator state"""
        return tuple(self._s)

    def next(self) -> int:
        """Generate next 64-bit word"""
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def uniform(self) -> float:
        """Uniform real in [0, 1) built from the 53 high bits of the next word"""
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def gaussian(self) -> float:
        """
        Standard normal draw (Box-Muller, cosine branch)

        Two uniform draws are always consumed.
        """
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(1.0 - u1)) * math.cos(2.0 * math.pi * u2)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)"""
        return min(int(self.uniform() * n), n - 1)

    def permutation(self, n: int) -> List[int]:
        """Fisher-Yates shuffle of range(n)"""
        items = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def derive_stream(master_seed: int, round_index: int, index: int) -> RngStream:
    """
    Compute the stream of one (round, slot) pair from the master seed

    :param master_seed: run seed
    :param round_index: generation number
    :param index: slot of the candidate inside its generation
    :return: a fresh stream, identical for identical parameters
    """
    mixed = (master_seed ^ ((round_index * GOLDEN_GAMMA) & MASK64) ^ index) & MASK64
    _, seed = splitmix64(mixed)
    return RngStream(seed)


def training_stream(master_seed: int, candidate_id: int) -> RngStream:
    """
    Stream given to the learner that trains a candidate

    It lives on a reserved round index so it never overlaps the streams building candidates.
    """
    return derive_stream(master_seed, TRAINING_ROUND, candidate_id)
