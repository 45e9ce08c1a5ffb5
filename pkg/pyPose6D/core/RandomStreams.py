#!python
from __future__ import division,print_function
import zlib
import numpy as np


def _stream_key(name):
    return zlib.crc32(str(name).encode('utf-8')) & 0xffffffff


class RandomStreams(object):
    '''Named, seeded, counter-based random number streams

    **Description**

        Every consumer of randomness (parameter initialization, dropout masks,
        batch shuffling, scene generation, RANSAC sampling) draws from its own
        named stream. Each stream is a :class:`numpy.random.Generator` backed
        by the counter-based Philox bit generator, keyed by the run seed and a
        stable hash of the stream name. Streams are independent, so adding a
        dropout layer never perturbs the data that is generated.

        Substreams are derived from (seed, name, index) and are used where
        work items must be reproducible regardless of the order in which they
        are processed (e.g. RANSAC trial ``i``).

    Example
    -------
    .. code-block:: python

        import pyPose6D

        streams = pyPose6D.RandomStreams(seed=7)
        init = streams.stream('init')
        mask = streams.stream('dropout').random((4,4)) > 0.5

        trial_rng = streams.substream('ransac',12)

        state = streams.state()        # JSON-serializable positions
        streams.restore(state)

    '''
    def __init__(self,seed=0):
        if int(seed) < 0:
            raise ValueError('Seed must be non-negative, got {}'.format(seed))
        self.seed = int(seed)
        self._streams = {}

    def __repr__(self):
        return '<RandomStreams seed:{} streams:{}>'.format(self.seed,sorted(self._streams))

    def _generator(self,*entropy):
        seq = np.random.SeedSequence([self.seed] + [int(e) for e in entropy])
        return np.random.Generator(np.random.Philox(seq))

    def stream(self,name):
        '''Return the (cached) generator for stream `name`'''
        if name not in self._streams:
            self._streams[name] = self._generator(_stream_key(name))
        return self._streams[name]

    def substream(self,name,index):
        '''Fresh generator for work item `index` of stream `name`

        Substreams are not cached; calling twice with the same arguments gives
        two generators that produce identical sequences.
        '''
        return self._generator(_stream_key(name),int(index))

    def state(self):
        '''Positions of every stream created so far, as plain Python data'''
        out = {}
        for name,gen in self._streams.items():
            out[name] = _to_plain(gen.bit_generator.state)
        return out

    def restore(self,state):
        '''Reset streams to positions previously returned by :meth:`state`'''
        for name,st in state.items():
            gen = self.stream(name)
            gen.bit_generator.state = _from_plain(st)


def _to_plain(obj):
    if isinstance(obj,dict):
        return {k:_to_plain(v) for k,v in obj.items()}
    if isinstance(obj,np.ndarray):
        return {'__array__':obj.tolist(),'dtype':str(obj.dtype)}
    if isinstance(obj,np.integer):
        return int(obj)
    return obj


def _from_plain(obj):
    if isinstance(obj,dict):
        if '__array__' in obj:
            return np.array(obj['__array__'],dtype=obj['dtype'])
        return {k:_from_plain(v) for k,v in obj.items()}
    return obj
