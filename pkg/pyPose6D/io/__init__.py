#!python
r'''
Data entering and leaving pyPose6D: BOP-layout annotations and PLY meshes
(millimeters on disk, meters inside the library), the seeded synthetic scene
generator used for training at desk scale, and the results CSV exchanged
with the BOP toolkit. Every file is written through :func:`atomic_write`.
'''
from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.io.SceneAnnotation import SceneAnnotation
from pyPose6D.io.SyntheticSample import SyntheticSample
from pyPose6D.io.load_bop_scene import load_bop_scene,read_json
from pyPose6D.io.write_bop_scene import write_bop_scene
from pyPose6D.io.load_ply import load_ply
from pyPose6D.io.write_ply import write_ply
from pyPose6D.io.load_models import load_models
from pyPose6D.io.results import write_results,read_results
from pyPose6D.io.class_lists import load_symmetric,load_class_names
from pyPose6D.io.render_silhouettes import render_silhouettes,class_color
from pyPose6D.io.generate_scene import generate_scene,make_target,class_cuboid,class_model,toy_camera
from pyPose6D.io.SyntheticDataset import SyntheticDataset
