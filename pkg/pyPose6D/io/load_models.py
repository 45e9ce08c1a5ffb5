#!python
from __future__ import division,print_function
import os
import re

from pyPose6D.core.ObjectTable import ObjectTable
from pyPose6D.core.Errors import ParseError
from pyPose6D.geometry.model_diameter import model_diameter
from pyPose6D.io.load_ply import load_ply
from pyPose6D.io.load_bop_scene import read_json
from pyPose6D.util.UnitConverter import default_converter

MODEL_PATTERN = re.compile(r'^obj_(\d+)\.ply$')


def load_models(directory,max_points=None):
    r'''Model clouds and diameters of a BOP ``models`` folder

    **Description**

        Every ``obj_XXXXXX.ply`` file is read with :func:`load_ply` and
        converted from millimeters to meters. Diameters come from
        ``models_info.json`` when it lists the object; otherwise they are
        computed from the cloud with :func:`pyPose6D.model_diameter`.

    Arguments
    ---------
    directory: str
        Folder holding the PLY meshes.

    max_points: int, *optional*
        Keep every k-th vertex so that at most `max_points` remain. ADD(-S)
        on dense meshes is expensive and the subsampled mean differs little.

    Returns
    -------
    clouds: ObjectTable
        obj_id -> (n,3) cloud in meters

    diameters: ObjectTable
        obj_id -> diameter in meters

    Raises
    ------
    *ParseError* if the folder does not exist or holds no model.
    '''
    if not os.path.isdir(directory):
        raise ParseError('models folder not found',path=directory)
    found = []
    for name in sorted(os.listdir(directory)):
        match = MODEL_PATTERN.match(name)
        if match:
            found.append((int(match.group(1)),os.path.join(directory,name)))
    if not found:
        raise ParseError('no obj_XXXXXX.ply files',path=directory)

    info_path = os.path.join(directory,'models_info.json')
    info = read_json(info_path) if os.path.isfile(info_path) else {}

    uc = default_converter()
    ids = [obj_id for obj_id,_ in found]
    clouds = ObjectTable(ids,name='model')
    diameters = ObjectTable(ids,name='diameter')
    for obj_id,path in found:
        cloud = load_ply(path,to_meters=True)
        if max_points is not None and len(cloud) > max_points:
            step = -(-len(cloud)//int(max_points))
            cloud = cloud[::step]
        clouds[obj_id] = cloud
        entry = info.get(str(obj_id),{})
        if 'diameter' in entry:
            diameters[obj_id] = uc.toMeters(float(entry['diameter']))
        else:
            diameters[obj_id] = model_diameter(cloud)
    return clouds,diameters
