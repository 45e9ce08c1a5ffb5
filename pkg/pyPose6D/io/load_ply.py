#!python
from __future__ import division,print_function
import numpy as np
from plyfile import PlyData,PlyParseError

from pyPose6D.core.Errors import ParseError,UnsupportedFormat
from pyPose6D.util.UnitConverter import default_converter


def load_ply(path,to_meters=False):
    r'''Vertex positions of a PLY mesh

    **Description**

        ASCII and binary little-endian files are read with ``plyfile``; faces
        and any other vertex properties are ignored. Coordinates are passed
        through unchanged unless `to_meters` is set, in which case they are
        taken to be millimeters (the BOP convention).

    Arguments
    ---------
    path: str

    to_meters: bool
        Convert millimeter coordinates to meters.

    Returns
    -------
    cloud: np.ndarray, (n,3)

    Raises
    ------
    *ParseError* for malformed files or a vertex element without x, y and z.

    *UnsupportedFormat* for big-endian binary files.
    '''
    try:
        ply = PlyData.read(path)
    except (PlyParseError,ValueError,IndexError) as e:
        raise ParseError('malformed PLY: {}'.format(e),path=path,line=getattr(e,'line',None))
    except IOError as e:
        raise ParseError(str(e),path=path)
    if not ply.text and ply.byte_order == '>':
        raise UnsupportedFormat('{}: big-endian PLY files are not supported'.format(path))
    try:
        vertex = ply['vertex']
    except KeyError:
        raise ParseError('no vertex element',path=path)
    names = [p.name for p in vertex.properties]
    for axis in ('x','y','z'):
        if axis not in names:
            raise ParseError('vertex element lacks property {}'.format(axis),path=path)
    cloud = np.stack([np.asarray(vertex[axis],dtype=np.float64) for axis in ('x','y','z')],axis=-1)
    if to_meters:
        cloud = default_converter().toMeters(cloud)
    return cloud
