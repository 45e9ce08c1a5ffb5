r'''
Pose accuracy metrics.

ADD averages the distance between corresponding model points under the
estimated and groundtruth poses; ADD-S averages closest-point distances and
is used for objects with indistinguishable views. ADD(-S) picks one of the
two per object class. Errors are summarized as the area under the
accuracy-threshold curve up to 0.1 m and as recall at 0.1 m or at a tenth of
the object diameter.
'''
from pyPose6D.metrics.EvalRecord import EvalRecord
from pyPose6D.metrics.MetricReport import MetricReport
from pyPose6D.metrics.add_error import add_error
from pyPose6D.metrics.adds_error import adds_error
from pyPose6D.metrics.auc import auc
from pyPose6D.metrics.recall_at import recall_at
from pyPose6D.metrics.evaluate import evaluate
from pyPose6D.metrics.match_estimates import match_estimates
