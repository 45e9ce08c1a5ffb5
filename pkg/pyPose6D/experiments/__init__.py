r'''
Seeded experiments built on the library: the finite-difference gradient
suite and the keypoint representation by pose recovery ablation.
'''
from pyPose6D.experiments.gradcheck import run_gradcheck,check_gradient
from pyPose6D.experiments.AblationConfig import AblationConfig
from pyPose6D.experiments.ablate import ablate,run_ablation,ablation_table,METHODS
