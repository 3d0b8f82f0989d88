# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from typing             import Optional
from ..envs             import EnvState, Environment, Policy, StepResult
from ..features         import FeatureVector, Featurizer
from ..network          import Network
from ..optim            import Optimizer
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import AgentError
from .models            import LearnerConfig, Transition
from .replay            import ReplayBuffer, TargetNetwork
from .td                import epsilon_greedy, online_update, replay_update

logger = logging.getLogger(LOGGER_NAME)

class Learner:
    """
    TD(0) / Sarsa(0) learner, optionally with experience replay and a target network

    Non-replay variants update online from every transition. Replay variants
    only learn from one sampled mini-batch per environment step, once the
    buffer holds a full batch.
    """

    def __init__(self,
                 net: Network,
                 optimizer: Optimizer,
                 featurizer: Featurizer,
                 config: LearnerConfig,
                 rng: np.random.Generator):
        """
        Args:
            net: Value network (one output for prediction, one per action for control)
            optimizer: Sgd or Adam over net.params
            featurizer: Observation preprocessing
            config: Learning system settings
            rng: Stream for exploration and replay sampling
        """
        self.net = net
        self.optimizer = optimizer
        self.featurizer = featurizer
        self.config = config
        self.rng = rng

        self.buffer: Optional[ReplayBuffer] = None
        if config.variant.uses_replay:
            self.buffer = ReplayBuffer(config.buffer_capacity)

        self.target: Optional[TargetNetwork] = None
        if config.variant.uses_target:
            self.target = TargetNetwork(net, config.target_sync_period)

        self.steps = 0
        self.updates = 0
        self._features: Optional[FeatureVector] = None
        self._action: Optional[int] = None

    def features(self, state: EnvState) -> FeatureVector:
        return self.featurizer(state.as_array())

    def _act(self, features: FeatureVector) -> int:
        return epsilon_greedy(self.net.forward(features), self.config.epsilon, self.rng)

    def begin_episode(self, state: EnvState, policy: Optional[Policy] = None) -> int:
        """Featurize the start state and pick the first action"""
        self._features = self.features(state)
        self._action = policy(state) if policy is not None else self._act(self._features)
        return self._action

    def step_control(self, env: Environment) -> StepResult:
        """Act, observe, choose the next action epsilon-greedily and learn"""
        if not self.config.control:
            raise AgentError("step_control called on a prediction learner")
        return self._step(env, None)

    def step_prediction(self, env: Environment, policy: Policy) -> StepResult:
        """Follow the fixed policy and learn state values"""
        if self.config.control:
            raise AgentError("step_prediction called on a control learner")
        return self._step(env, policy)

    def _step(self, env: Environment, policy: Optional[Policy]) -> StepResult:
        if self._features is None:
            raise AgentError("begin_episode() must be called before stepping")

        result = env.step(self._action)
        next_features = self.features(result.next_state)
        next_action = 0
        if not result.terminal:
            next_action = policy(result.next_state) if policy is not None else self._act(next_features)

        self._learn(Transition(
            s_features=self._features,
            action=self._action,
            reward=result.reward,
            s_next_features=next_features,
            next_action=next_action,
            terminal=result.terminal
        ))

        self._features, self._action = next_features, next_action
        return result

    def _learn(self, tr: Transition) -> None:
        self.steps += 1
        gamma = self.config.gamma

        if self.buffer is None:
            online_update(self.net, self.optimizer, tr, gamma)
            self.updates += 1
        else:
            self.buffer.push(tr)
            if len(self.buffer) >= self.config.batch_size:
                replay_update(self.net, self.target, self.buffer, self.optimizer,
                              self.config.batch_size, self.rng, gamma)
                self.updates += 1

        if self.target is not None:
            self.target.tick(self.net)
